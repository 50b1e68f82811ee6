use std::collections::{BTreeMap, HashMap};

use super::chain::Chain;
use super::complex::{remove, Simplex, SimplicialComplex};
use super::local::LocalSystem;
use crate::error::{Error, Result};
use crate::linalg::int;

/// Sign with which face `i` of `s` enters `∂s` in `system`.
fn face_sign(system: &LocalSystem, s: &[usize], i: usize) -> i32 {
    let base = if i % 2 == 0 { 1 } else { -1 };
    if i == 0 {
        base * system.sign(s[0], s[1])
    } else {
        base
    }
}

/// Top simplices adjacent to each codimension-one face, with the face position.
fn facet_incidence(x: &SimplicialComplex, n: usize) -> Result<HashMap<Simplex, Vec<(usize, usize)>>> {
    if let Some(m) = x.maximal_simplices().into_iter().find(|m| m.len() != n + 1) {
        return Err(Error::NotPseudomanifold(format!("maximal simplex {m:?} has dimension {}", m.len() - 1)));
    }
    let mut inc: HashMap<Simplex, Vec<(usize, usize)>> = HashMap::new();
    for (j, s) in x.simplices(n).iter().enumerate() {
        for i in 0..s.len() {
            inc.entry(remove(s, i)).or_default().push((j, i));
        }
    }
    if let Some((f, l)) = inc.iter().find(|(_, l)| l.len() != 2) {
        return Err(Error::NotPseudomanifold(format!("face {f:?} lies in {} top simplices", l.len())));
    }
    Ok(inc)
}

/// Propagates signs `ε` across shared faces of the top simplices selected by `within`, so
/// that the chosen face terms cancel. Returns `None` on a conflict.
fn propagate(
    x: &SimplicialComplex,
    n: usize,
    system: &LocalSystem,
    inc: &HashMap<Simplex, Vec<(usize, usize)>>,
    within: impl Fn(&Simplex) -> bool,
    face_ok: impl Fn(&Simplex) -> bool,
) -> Option<BTreeMap<usize, i32>> {
    let tops = x.simplices(n);
    let mut eps: BTreeMap<usize, i32> = BTreeMap::new();
    for start in 0..tops.len() {
        if !within(&tops[start]) || eps.contains_key(&start) {
            continue;
        }
        eps.insert(start, 1);
        let mut stack = vec![start];
        while let Some(j) = stack.pop() {
            let s = &tops[j];
            for i in 0..s.len() {
                let f = remove(s, i);
                if !face_ok(&f) {
                    continue;
                }
                for &(j2, i2) in &inc[&f] {
                    if j2 == j && i2 == i {
                        continue;
                    }
                    let want = -eps[&j] * face_sign(system, s, i) * face_sign(system, &tops[j2], i2);
                    match eps.get(&j2) {
                        None => {
                            eps.insert(j2, want);
                            stack.push(j2);
                        }
                        Some(&e) if e != want => return None,
                        Some(_) => {}
                    }
                }
            }
        }
    }
    Some(eps)
}

/// Sum of coherently signed top simplices of a closed pseudomanifold, optionally twisted.
///
/// Each connected component starts from its least top simplex with sign +1.
pub fn fundamental_class(x: &SimplicialComplex, system: Option<&LocalSystem>) -> Result<Chain> {
    let trivial = LocalSystem::trivial();
    let system = system.unwrap_or(&trivial);
    system.validate(x)?;
    let Some(n) = x.dim() else {
        return Err(Error::NotPseudomanifold("empty complex".into()));
    };
    if n == 0 {
        return Chain::from_terms(0, system.clone(), x.simplices(0).iter().map(|s| (s.clone(), int(1))));
    }
    let inc = facet_incidence(x, n)?;
    let eps = propagate(x, n, system, &inc, |_| true, |_| true).ok_or(Error::NotOrientable)?;
    let tops = x.simplices(n);
    Chain::from_terms(n, system.clone(), eps.into_iter().map(|(j, e)| (tops[j].clone(), int(e as i64))))
}

/// The orientation system: trivial when the complex is orientable, otherwise the signs
/// comparing local orientations of vertex stars along each edge.
pub fn orientation_system(x: &SimplicialComplex) -> Result<LocalSystem> {
    match fundamental_class(x, None) {
        Ok(_) => return Ok(LocalSystem::trivial()),
        Err(Error::NotOrientable) => {}
        Err(e) => return Err(e),
    }
    let n = x.dim().expect("nonempty");
    let inc = facet_incidence(x, n)?;
    let trivial = LocalSystem::trivial();
    let tops = x.simplices(n);
    // rel[u][j]: orientation of top simplex j relative to a coherent orientation of star(u).
    let mut rel: Vec<BTreeMap<usize, i32>> = vec![BTreeMap::new(); x.labels().len()];
    for u in x.vertices() {
        rel[u] = propagate(x, n, &trivial, &inc, |s| s.contains(&u), |f| f.contains(&u))
            .ok_or_else(|| Error::NotPseudomanifold(format!("star of {} is not orientable", x.label(u))))?;
    }
    let mut negative = Vec::new();
    for e in x.simplices(1) {
        let (u, v) = (e[0], e[1]);
        let mut sign = None;
        for (j, t) in tops.iter().enumerate() {
            if t.contains(&u) && t.contains(&v) {
                let s = rel[u][&j] * rel[v][&j];
                match sign {
                    None => sign = Some(s),
                    Some(p) if p != s => {
                        return Err(Error::NotPseudomanifold(format!("star of edge {e:?} is not orientable")))
                    }
                    _ => {}
                }
            }
        }
        if sign == Some(-1) {
            negative.push((u, v));
        }
    }
    Ok(LocalSystem::from_negative_edges(negative))
}
