//! Simplicial circle bundles over a triangulated 2-sphere with prescribed Euler number.
//!
//! Vertex `(v, j)` of `Z` is point `j` of the `m`-gon over `v`. Over an edge `u < w` sits
//! the annulus `A(c)` whose cross edges are the pairs `(u_j, w_k)` with `k − j ∈ {c, c+1}`.
//! Over a triangle `u < v < w` the prism is swept by a cyclic monotone path of transverse
//! triangles: each step advances one corner, in an order repeated `m` times. Advancing in the
//! order `w, v, u` forces `c_uw = c_uv + c_vw`, the order `v, w, u` forces one more; the
//! excess `s ∈ {0, 1}` per triangle is the twisting, and the annulus labels solve
//! `δc = −s (mod m)`.

use std::collections::BTreeSet;

use super::bundle::CircleBundle;
use crate::error::{Error, Result};
use crate::topology::{fundamental_class, standard, Chain, Simplex, SimplicialComplex, SimplicialMap};

#[derive(Debug, Clone)]
pub struct GeneratedBundle {
    pub bundle: CircleBundle,
    /// Fundamental class of the base sphere.
    pub base_class: Chain,
    /// Base triangles carrying twisting `s = 1`.
    pub twisted: Vec<Simplex>,
}

fn is_prime(m: usize) -> bool {
    m >= 2 && (2..m).take_while(|d| d * d <= m).all(|d| m % d != 0)
}

fn inverse_mod(a: i64, m: i64) -> i64 {
    let (mut r0, mut r1, mut s0, mut s1) = (a.rem_euclid(m), m, 1i64, 0i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    s0.rem_euclid(m)
}

/// Some solution of `A x = b` over `ℤ/m` for prime `m`.
fn solve_mod_prime(mut a: Vec<Vec<i64>>, mut b: Vec<i64>, cols: usize, m: i64) -> Option<Vec<i64>> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..cols {
        let Some(p) = (row..a.len()).find(|&r| a[r][c] % m != 0) else { continue };
        a.swap(row, p);
        b.swap(row, p);
        let inv = inverse_mod(a[row][c], m);
        for k in 0..cols {
            a[row][k] = (a[row][k] * inv).rem_euclid(m);
        }
        b[row] = (b[row] * inv).rem_euclid(m);
        for r in 0..a.len() {
            if r != row && a[r][c] != 0 {
                let f = a[r][c];
                for k in 0..cols {
                    a[r][k] = (a[r][k] - f * a[row][k]).rem_euclid(m);
                }
                b[r] = (b[r] - f * b[row]).rem_euclid(m);
            }
        }
        pivots.push(c);
        row += 1;
    }
    if b[row..].iter().any(|&v| v != 0) {
        return None;
    }
    let mut x = vec![0; cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = b[r];
    }
    Some(x)
}

/// Smallest suspended polygon whose fundamental class has `need` triangles of sign `sign`.
fn base_sphere(need: usize, sign: i64) -> (SimplicialComplex, Chain) {
    let mut l = 4;
    loop {
        let y = standard::suspended_polygon(l);
        let fc = fundamental_class(&y, None).expect("a sphere is orientable");
        let count = fc.terms().values().filter(|c| **c == crate::linalg::int(sign)).count();
        if count >= need {
            return (y, fc);
        }
        l += 1;
    }
}

/// A circle bundle with `m`-gon fibers over a 2-sphere whose twisting sums to `p` fiber turns.
pub fn generate_circle_bundle(p: i64, m: usize) -> Result<GeneratedBundle> {
    if m < 3 || !is_prime(m) {
        return Err(Error::Invalid(format!("fiber size {m} must be a prime at least 3")));
    }
    let sign = if p < 0 { -1 } else { 1 };
    let need = p.unsigned_abs() as usize * m;
    let (y, fc) = base_sphere(need, sign);
    let twisted: Vec<Simplex> =
        fc.terms().iter().filter(|(_, c)| **c == crate::linalg::int(sign)).map(|(s, _)| s.clone()).take(need).collect();
    let twisted_set: BTreeSet<&Simplex> = twisted.iter().collect();

    let edges = y.simplices(1);
    let tris = y.simplices(2);
    let mi = m as i64;
    let rows: Vec<Vec<i64>> = tris
        .iter()
        .map(|t| {
            let mut r = vec![0; edges.len()];
            r[y.index_of(&[t[1], t[2]]).unwrap()] += 1;
            r[y.index_of(&[t[0], t[2]]).unwrap()] -= 1;
            r[y.index_of(&[t[0], t[1]]).unwrap()] += 1;
            r
        })
        .collect();
    let rhs: Vec<i64> = tris.iter().map(|t| if twisted_set.contains(t) { mi - 1 } else { 0 }).collect();
    let c = solve_mod_prime(rows, rhs, edges.len(), mi)
        .ok_or_else(|| Error::Invalid("twisting is not a coboundary mod m".into()))?;
    let label = |e: [usize; 2]| c[y.index_of(&e).unwrap()];

    let vid = |v: usize, j: i64| v * m + j.rem_euclid(mi) as usize;
    let mut simplices: Vec<Simplex> = Vec::new();
    for (e, &ce) in edges.iter().zip(&c) {
        let (u, w) = (e[0], e[1]);
        for j in 0..mi {
            simplices.push(vec![vid(u, j), vid(u, j + 1), vid(w, j + ce + 1)]);
            simplices.push(vec![vid(u, j), vid(w, j + ce), vid(w, j + ce + 1)]);
        }
    }
    for t in tris {
        let (u, v, w) = (t[0], t[1], t[2]);
        let (c_uv, c_vw) = (label([u, v]), label([v, w]));
        // Corner positions 0, 1, 2 stand for u, v, w.
        let (order, k0, l0) = if twisted_set.contains(t) {
            ([1, 2, 0], c_uv, c_uv + c_vw + 1)
        } else {
            ([2, 1, 0], c_uv, c_uv + c_vw)
        };
        let corners = [u, v, w];
        let mut state = [0, k0, l0];
        for _ in 0..m {
            for &x in &order {
                let mut s: Vec<usize> = (0..3).map(|i| vid(corners[i], state[i])).collect();
                s.push(vid(corners[x], state[x] + 1));
                simplices.push(s);
                state[x] += 1;
            }
        }
    }
    let labels: Vec<String> =
        (0..y.labels().len() * m).map(|i| format!("{}.{}", y.label(i / m), i % m)).collect();
    let z = SimplicialComplex::closure(labels, simplices.into_iter().map(|mut s| {
        s.sort_unstable();
        s
    }))?;
    let rho = SimplicialMap::new(&z, &y, (0..z.labels().len()).map(|i| i / m).collect())?;
    let fibers = (0..y.labels().len()).map(|v| (0..mi).map(|j| vid(v, j)).collect()).collect();
    let bundle = CircleBundle::with_fibers(y, z, rho, fibers)?;
    Ok(GeneratedBundle { bundle, base_class: fc, twisted })
}
