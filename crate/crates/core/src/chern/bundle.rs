use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::int;
use crate::topology::{
    is_homologous, Chain, ComplexJson, LocalSystem, Simplex, SimplicialComplex, SimplicialMap, SystemJson,
};

/// A simplicial map `ρ : Z → Y` whose vertex fibers are circles, with oriented fibers and
/// the orientation system `𝒪` on `Y` comparing fiber orientations along edges.
#[derive(Debug, Clone)]
pub struct CircleBundle {
    pub y: SimplicialComplex,
    pub z: SimplicialComplex,
    pub rho: SimplicialMap,
    /// `fibers[v]` lists `ρ⁻¹(v)` cyclically in the chosen orientation.
    pub fibers: Vec<Vec<usize>>,
    pub orientation: LocalSystem,
}

/// The fiber over `v` as a cycle, starting at its least vertex and stepping to the smaller
/// neighbour.
fn fiber_cycle(z: &SimplicialComplex, rho: &SimplicialMap, y: &SimplicialComplex, v: usize) -> Result<Vec<usize>> {
    let bad = |why: &str| Error::FiberNotCircle(format!("{} ({why})", y.label(v)));
    let verts: BTreeSet<usize> = z.vertices().filter(|&p| rho.apply(p) == v).collect();
    if verts.len() < 3 {
        return Err(bad("fewer than three vertices"));
    }
    if z.simplices(2).iter().any(|s| s.iter().all(|p| verts.contains(p))) {
        return Err(bad("contains a 2-simplex"));
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); z.labels().len()];
    for e in z.simplices(1) {
        if verts.contains(&e[0]) && verts.contains(&e[1]) {
            adj[e[0]].push(e[1]);
            adj[e[1]].push(e[0]);
        }
    }
    if verts.iter().any(|&p| adj[p].len() != 2) {
        return Err(bad("a vertex does not have exactly two fiber neighbours"));
    }
    let start = *verts.iter().next().unwrap();
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = *adj[start].iter().min().unwrap();
    while cur != start {
        cycle.push(cur);
        let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
        prev = cur;
        cur = next;
    }
    if cycle.len() != verts.len() {
        return Err(bad("disconnected"));
    }
    Ok(cycle)
}

/// The 1-chain traversing `cycle` in order, with coefficients in a trivial system.
pub fn cycle_chain(cycle: &[usize], system: LocalSystem) -> Chain {
    let mut c = Chain::zero(1, system);
    for (i, &a) in cycle.iter().enumerate() {
        let b = cycle[(i + 1) % cycle.len()];
        c.add_term(vec![a, b], int(if a < b { 1 } else { -1 })).expect("edge");
    }
    c
}

impl CircleBundle {
    /// Orients fibers canonically and gauges the orientation system to the trivial one when
    /// `Y` admits it (each component's least vertex keeps its canonical orientation).
    pub fn new(y: SimplicialComplex, z: SimplicialComplex, rho: SimplicialMap) -> Result<Self> {
        rho.validate(&z, &y)?;
        let fibers = y.vertices().map(|v| fiber_cycle(&z, &rho, &y, v)).collect::<Result<Vec<_>>>()?;
        let mut b = Self::with_fibers(y, z, rho, fibers)?;
        if let Some(g) = b.orientation.trivialization(&b.y) {
            for (v, &s) in g.iter().enumerate() {
                if s < 0 {
                    b.fibers[v].reverse();
                }
            }
            b.orientation = LocalSystem::trivial();
        }
        Ok(b)
    }

    /// Uses the given fiber orientations; `fibers[v]` must traverse the circle `ρ⁻¹(v)`.
    pub fn with_fibers(y: SimplicialComplex, z: SimplicialComplex, rho: SimplicialMap, fibers: Vec<Vec<usize>>) -> Result<Self> {
        rho.validate(&z, &y)?;
        if fibers.len() != y.labels().len() {
            return Err(Error::Invalid(format!("{} fibers for {} base vertices", fibers.len(), y.labels().len())));
        }
        for (v, f) in fibers.iter().enumerate() {
            let canonical = fiber_cycle(&z, &rho, &y, v)?;
            let same: BTreeSet<&usize> = f.iter().collect();
            if same != canonical.iter().collect() || f.len() != canonical.len() {
                return Err(Error::FiberNotCircle(format!("{} (listed vertices are not the fiber)", y.label(v))));
            }
            for (i, &a) in f.iter().enumerate() {
                let b = f[(i + 1) % f.len()];
                if !z.contains(&[a.min(b), a.max(b)]) {
                    return Err(Error::FiberNotCircle(format!("{} (listed order skips an edge)", y.label(v))));
                }
            }
        }
        let mut negative = Vec::new();
        for e in y.simplices(1) {
            let (u, w) = (e[0], e[1]);
            let over = z.subcomplex(|s| s.iter().all(|&p| rho.apply(p) == u || rho.apply(p) == w));
            let cu = cycle_chain(&fibers[u], LocalSystem::trivial());
            let cw = cycle_chain(&fibers[w], LocalSystem::trivial());
            if is_homologous(&over, &cu, &cw)?.is_some() {
                continue;
            }
            if is_homologous(&over, &cu, &cw.scale(&int(-1)))?.is_some() {
                negative.push((u, w));
            } else {
                return Err(Error::FiberNotCircle(format!(
                    "edge {} -- {} (fibers are not homologous in its preimage)",
                    y.label(u),
                    y.label(w)
                )));
            }
        }
        Ok(CircleBundle { y, z, rho, fibers, orientation: LocalSystem::from_negative_edges(negative) })
    }

    pub fn fiber_length(&self, v: usize) -> usize {
        self.fibers[v].len()
    }

    /// `ρ*𝒪`, the coefficient system on `Z` of the Chern cochain.
    pub fn pulled_orientation(&self) -> LocalSystem {
        self.orientation.pullback(&self.z, &self.rho)
    }

    /// Simplices of `Z` whose image under `ρ` is exactly `s`.
    pub fn preimage_onto(&self, k: usize, s: &[usize]) -> Vec<Simplex> {
        self.z.simplices(k).iter().filter(|t| self.rho.image(t) == s).cloned().collect()
    }
}

/// `{"Z", "Y", "rho", "orientation", "fibers"}`, all keyed by vertex labels. `fibers` lists each
/// fiber cyclically in its orientation; when absent, fibers are oriented canonically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleJson {
    #[serde(rename = "Z")]
    pub z: ComplexJson,
    #[serde(rename = "Y")]
    pub y: ComplexJson,
    pub rho: BTreeMap<String, String>,
    pub orientation: SystemJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fibers: Option<BTreeMap<String, Vec<String>>>,
}

impl CircleBundle {
    pub fn to_json(&self) -> BundleJson {
        let name = |x: &SimplicialComplex, v: usize| x.label(v).to_string();
        BundleJson {
            z: self.z.to_json(),
            y: self.y.to_json(),
            rho: (0..self.z.labels().len()).map(|p| (name(&self.z, p), name(&self.y, self.rho.apply(p)))).collect(),
            orientation: self.orientation.to_json(&self.y),
            fibers: Some(
                self.fibers
                    .iter()
                    .enumerate()
                    .map(|(v, f)| (name(&self.y, v), f.iter().map(|&p| name(&self.z, p)).collect()))
                    .collect(),
            ),
        }
    }

    /// Rebuilds the bundle and checks that the stated orientation system is the one the
    /// fibers induce.
    pub fn from_json(j: &BundleJson) -> Result<Self> {
        let y = SimplicialComplex::from_json(&j.y)?;
        let z = SimplicialComplex::from_json(&j.z)?;
        let find = |x: &SimplicialComplex, l: &str| {
            x.vertex_index(l).ok_or_else(|| Error::Parse(format!("unknown vertex {l:?}")))
        };
        let mut map = vec![usize::MAX; z.labels().len()];
        for (a, b) in &j.rho {
            map[find(&z, a)?] = find(&y, b)?;
        }
        if let Some(p) = map.iter().position(|&v| v == usize::MAX) {
            return Err(Error::InvalidMap(format!("rho does not map {}", z.label(p))));
        }
        let rho = SimplicialMap::new(&z, &y, map)?;
        let stated = LocalSystem::from_json(&y, &j.orientation)?;
        let b = match &j.fibers {
            None => CircleBundle::new(y, z, rho)?,
            Some(f) => {
                let mut fibers = vec![Vec::new(); y.labels().len()];
                for (v, list) in f {
                    fibers[find(&y, v)?] = list.iter().map(|l| find(&z, l)).collect::<Result<_>>()?;
                }
                CircleBundle::with_fibers(y, z, rho, fibers)?
            }
        };
        if stated != b.orientation {
            return Err(Error::InvalidLocalSystem("orientation does not match the fiber orientations".into()));
        }
        Ok(b)
    }
}
