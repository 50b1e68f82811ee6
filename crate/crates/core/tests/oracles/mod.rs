//! Independent reference computations shared by integration and acceptance tests.
//!
//! Nothing here calls the library's algorithms under test; only its data types and exact
//! rational arithmetic are reused.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_traits::Zero;
use pontrjagin::linalg::{int, Rational};
use pontrjagin::matroid::{Sign, SignVector};
use rand::Rng;

/// Random integer vectors with entries in `-2..=2`.
pub fn random_configuration(rng: &mut impl Rng, n: usize, d: usize) -> Vec<Vec<i64>> {
    (0..n).map(|_| (0..d).map(|_| rng.gen_range(-2..=2)).collect()).collect()
}

pub fn signs_of(functional: &[Rational], vectors: &[Vec<i64>]) -> SignVector {
    SignVector(
        vectors
            .iter()
            .map(|v| {
                let dot: Rational = v.iter().zip(functional).map(|(&a, c)| int(a) * c).sum();
                Sign::of(&dot)
            })
            .collect(),
    )
}

/// All covectors of a planar configuration, from the faces of its line arrangement.
///
/// Candidate functionals: the origin, every ray `±v⊥`, every sum of two non-opposite rays
/// (which hits each open sector between adjacent rays), and every ray rotated by a right
/// angle (the two half-planes when there is a single line). Each candidate yields a
/// covector, and every face contains a candidate.
pub fn planar_covectors(vectors: &[Vec<i64>]) -> BTreeSet<SignVector> {
    let mut rays: Vec<[i64; 2]> = Vec::new();
    for v in vectors {
        if v[0] != 0 || v[1] != 0 {
            rays.push([-v[1], v[0]]);
            rays.push([v[1], -v[0]]);
        }
    }
    let mut candidates: Vec<[i64; 2]> = vec![[0, 0]];
    candidates.extend(rays.iter().copied());
    for r in &rays {
        candidates.push([-r[1], r[0]]);
        for s in &rays {
            let sum = [r[0] + s[0], r[1] + s[1]];
            if sum != [0, 0] {
                candidates.push(sum);
            }
        }
    }
    if rays.is_empty() {
        candidates.push([1, 0]);
    }
    candidates.iter().map(|c| signs_of(&[int(c[0]), int(c[1])], vectors)).collect()
}

/// Rank by textbook Gaussian elimination over ℚ.
pub fn matrix_rank(vectors: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<Rational>> = vectors.iter().map(|v| v.iter().map(|&x| int(x)).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &m[rank][c];
                for k in 0..cols {
                    let t = &f * &m[rank][k];
                    m[r][k] -= t;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Number of distinct lines spanned by the nonzero vectors of a planar configuration.
pub fn distinct_lines(vectors: &[Vec<i64>]) -> usize {
    let mut lines: BTreeSet<(i64, i64)> = BTreeSet::new();
    for v in vectors {
        let (a, b) = (v[0], v[1]);
        if a == 0 && b == 0 {
            continue;
        }
        let g = gcd(a.abs(), b.abs());
        let (mut a, mut b) = (a / g, b / g);
        if a < 0 || (a == 0 && b < 0) {
            a = -a;
            b = -b;
        }
        lines.insert((a, b));
    }
    lines.len()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn neg(c: &SignVector) -> SignVector {
    SignVector(c.0.iter().map(|&s| -s).collect())
}

fn comp(c: &SignVector, d: &SignVector) -> SignVector {
    SignVector(c.0.iter().zip(&d.0).map(|(&a, &b)| if a != Sign::Zero { a } else { b }).collect())
}

/// The four covector axioms written out literally; returns the first failing axiom.
pub fn brute_force_axioms(n: usize, l: &BTreeSet<SignVector>) -> Option<u8> {
    if !l.contains(&SignVector(vec![Sign::Zero; n])) {
        return Some(1);
    }
    if l.iter().any(|c| !l.contains(&neg(c))) {
        return Some(2);
    }
    if l.iter().any(|c| l.iter().any(|d| !l.contains(&comp(c, d)))) {
        return Some(3);
    }
    for c in l {
        for d in l {
            for v in 0..n {
                if c.0[v] != Sign::Plus || d.0[v] != Sign::Minus {
                    continue;
                }
                let ok = l.iter().any(|e| {
                    e.0[v] == Sign::Zero
                        && (0..n).all(|w| {
                            let (cw, dw, ew) = (c.0[w], d.0[w], e.0[w]);
                            let both_zero = cw == Sign::Zero && dw == Sign::Zero;
                            (!both_zero || ew == Sign::Zero)
                                && (both_zero || cw == Sign::Minus || dw == Sign::Minus || ew == Sign::Plus)
                                && (both_zero || cw == Sign::Plus || dw == Sign::Plus || ew == Sign::Minus)
                        })
                });
                if !ok {
                    return Some(4);
                }
            }
        }
    }
    None
}

/// Whether some tuple of covectors witnesses independence of `subset`, by trying every
/// assignment of covectors to its elements.
pub fn brute_force_independent(l: &[SignVector], subset: &[usize]) -> bool {
    fn go(l: &[SignVector], subset: &[usize], i: usize) -> bool {
        if i == subset.len() {
            return true;
        }
        l.iter().any(|c| {
            subset.iter().enumerate().all(|(k, &v)| (c.0[v] == Sign::Zero) == (k != i)) && go(l, subset, i + 1)
        })
    }
    go(l, subset, 0)
}

/// Rank-1 quotients `{0, ±c}` of a planar configuration, from the arrangement oracle, with the
/// covering relation `q ⇝ q'` (the covector of `q'` is a zeroing of one of `q`).
pub fn planar_quotient_graph(vectors: &[Vec<i64>]) -> (Vec<BTreeSet<SignVector>>, Vec<(usize, usize)>) {
    let n = vectors.len();
    let zero = SignVector(vec![Sign::Zero; n]);
    let pairs: BTreeSet<BTreeSet<SignVector>> = planar_covectors(vectors)
        .into_iter()
        .filter(|c| *c != zero)
        .map(|c| BTreeSet::from([zero.clone(), neg(&c), c]))
        .collect();
    let pairs: Vec<BTreeSet<SignVector>> = pairs.into_iter().collect();
    let zeroing = |d: &SignVector, c: &SignVector| (0..n).all(|i| d.0[i] == Sign::Zero || d.0[i] == c.0[i]);
    let specializes = |a: usize, b: usize| a != b && pairs[b].iter().all(|d| pairs[a].iter().any(|c| zeroing(d, c)));
    let m = pairs.len();
    let mut edges = Vec::new();
    for a in 0..m {
        for b in 0..m {
            if specializes(a, b) && !(0..m).any(|k| specializes(a, k) && specializes(k, b)) {
                edges.push((a, b));
            }
        }
    }
    (pairs, edges)
}

/// Length of the cycle through vertex 0 if the graph is a single cycle.
pub fn single_cycle_length(m: usize, edges: &[(usize, usize)]) -> Option<usize> {
    let mut adj = vec![Vec::new(); m];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    if m < 3 || adj.iter().any(|a| a.len() != 2) {
        return None;
    }
    let (mut prev, mut cur, mut len) = (0, adj[0][0], 1);
    while cur != 0 {
        let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
        prev = cur;
        cur = next;
        len += 1;
    }
    (len == m).then_some(m)
}

fn gcd_ext(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a.abs(), a.signum(), 0)
    } else {
        let (g, x, y) = gcd_ext(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

/// Nonzero diagonal of the Smith normal form, by textbook row and column reduction over i128.
pub fn smith_diagonal(mut m: Vec<Vec<i128>>) -> Vec<i128> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pr, pc)) = (t..rows).flat_map(|r| (t..cols).map(move |c| (r, c))).filter(|&(r, c)| m[r][c] != 0).min_by_key(|&(r, c)| m[r][c].abs()) else {
            break;
        };
        m.swap(t, pr);
        for row in m.iter_mut() {
            row.swap(t, pc);
        }
        // Exact divisions clear entries outright; gcd steps strictly shrink the pivot.
        loop {
            let mut changed = false;
            for r in t + 1..rows {
                if m[r][t] != 0 && m[r][t] % m[t][t] == 0 {
                    let q = m[r][t] / m[t][t];
                    for c in 0..cols {
                        let v = m[t][c];
                        m[r][c] -= q * v;
                    }
                } else if m[r][t] != 0 {
                    let (g, x, y) = gcd_ext(m[t][t], m[r][t]);
                    let (a, b) = (m[t][t] / g, m[r][t] / g);
                    for c in 0..cols {
                        let (u, v) = (m[t][c], m[r][c]);
                        m[t][c] = x * u + y * v;
                        m[r][c] = -b * u + a * v;
                    }
                    changed = true;
                }
            }
            for c in t + 1..cols {
                if m[t][c] != 0 && m[t][c] % m[t][t] == 0 {
                    let q = m[t][c] / m[t][t];
                    for row in m.iter_mut() {
                        let v = row[t];
                        row[c] -= q * v;
                    }
                } else if m[t][c] != 0 {
                    let (g, x, y) = gcd_ext(m[t][t], m[t][c]);
                    let (a, b) = (m[t][t] / g, m[t][c] / g);
                    for row in m.iter_mut() {
                        let (u, v) = (row[t], row[c]);
                        row[t] = x * u + y * v;
                        row[c] = -b * u + a * v;
                    }
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        // Enforce divisibility of the remaining block by folding an offending row in.
        if let Some(r) = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| m[r][c] % m[t][t] != 0)) {
            for c in 0..cols {
                let v = m[r][c];
                m[t][c] += v;
            }
            continue;
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    diag
}

/// `(betti, torsion)` of `H_1` with integer coefficients of the complex with the given
/// vertex count, edges and triangles, from boundary matrices built here.
pub fn first_homology(vertices: usize, edges: &[Vec<usize>], triangles: &[Vec<usize>]) -> (usize, Vec<i128>) {
    let index = |e: &[usize]| edges.iter().position(|f| f == e).expect("face is an edge");
    let d1: Vec<Vec<i128>> = (0..vertices)
        .map(|v| edges.iter().map(|e| if e[1] == v { 1 } else if e[0] == v { -1 } else { 0 }).collect())
        .collect();
    let mut d2 = vec![vec![0i128; triangles.len()]; edges.len()];
    for (j, t) in triangles.iter().enumerate() {
        d2[index(&[t[1], t[2]])][j] += 1;
        d2[index(&[t[0], t[2]])][j] -= 1;
        d2[index(&[t[0], t[1]])][j] += 1;
    }
    let r1 = smith_diagonal(d1).len();
    let s2 = smith_diagonal(d2);
    let torsion = s2.iter().copied().filter(|&d| d > 1).collect();
    (edges.len() - r1 - s2.len(), torsion)
}
