//! The posets `U_Δ` of local tangent data, sampled from linear embeddings of stars.
//!
//! An element of `U_Δ` is a pair `(t, y)` with `t ⇒ y`. Here `t` is the oriented matroid of
//! the vectors `(e(v), 1)` for a piecewise-linear embedding `e` of the star of Δ that sends
//! the barycenter of Δ to the origin (vertices outside the star give the zero vector), and
//! `y` is the image of that configuration under a rank-2 linear projection. Only realizable
//! elements are found, so every result is flagged incomplete.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::vertex::{validate_tangent, validate_y_vertex, ValidationReport, YVertex};
use crate::error::{Error, Result};
use crate::linalg::{int, QMatrix, Rational};
use crate::matroid::{from_vectors, order_complex, OrientedMatroid, Poset, VectorConfiguration};
use crate::topology::{barycenter_label, Simplex, SimplicialComplex};

pub const DEFAULT_SAMPLES: usize = 32;
pub const DEFAULT_SEED: u64 = 0x005e_ed0f_7a6e;
const COORDINATE_RANGE: i64 = 9;
const PROJECTIONS_PER_SAMPLE: usize = 4;

#[derive(Debug, Clone)]
pub struct UDelta {
    pub delta: Simplex,
    pub elements: Vec<(OrientedMatroid, OrientedMatroid)>,
    pub poset: Poset,
    /// Always true: non-realizable elements are never enumerated.
    pub incomplete: bool,
    pub samples_drawn: usize,
    pub samples_accepted: usize,
}

fn seed_for(seed: u64, delta: &[usize]) -> u64 {
    delta.iter().fold(seed, |h, &v| h.rotate_left(17) ^ (v as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn realize(x: &SimplicialComplex, vectors: Vec<Vec<Rational>>) -> Result<OrientedMatroid> {
    from_vectors(&VectorConfiguration::new(x.labels().to_vec(), vectors)?, usize::MAX)
}

/// `(e(v), 1)` for star vertices, with `e` centred at the barycenter of Δ; zero elsewhere.
fn sample_embedding(rng: &mut ChaCha8Rng, x: &SimplicialComplex, n: usize, delta: &[usize]) -> Vec<Vec<Rational>> {
    let star = x.star_vertices(delta);
    let raw: Vec<Vec<i64>> = (0..x.labels().len())
        .map(|_| (0..n).map(|_| rng.gen_range(-COORDINATE_RANGE..=COORDINATE_RANGE)).collect())
        .collect();
    let k = int(delta.len() as i64);
    let centre: Vec<Rational> =
        (0..n).map(|i| delta.iter().map(|&v| int(raw[v][i])).sum::<Rational>() / &k).collect();
    (0..x.labels().len())
        .map(|v| {
            if star.contains(&v) {
                let mut p: Vec<Rational> = (0..n).map(|i| int(raw[v][i]) - &centre[i]).collect();
                p.push(int(1));
                p
            } else {
                vec![int(0); n + 1]
            }
        })
        .collect()
}

fn sample_projection(rng: &mut ChaCha8Rng, n: usize) -> QMatrix {
    loop {
        let rows: Vec<Vec<Rational>> = (0..2).map(|_| (0..=n).map(|_| int(rng.gen_range(-3..=3))).collect()).collect();
        let a = QMatrix::from_rows(rows).expect("rectangular");
        if a.rank() == 2 {
            return a;
        }
    }
}

pub fn build_u_delta(x: &SimplicialComplex, n: usize, delta: &[usize], budget: usize) -> Result<UDelta> {
    build_u_delta_seeded(x, n, delta, budget, DEFAULT_SEED)
}

/// Samples `budget` embeddings of the star of Δ; keeps those whose matroid passes the
/// tangent conditions, and pairs each with rank-2 projections (the identity when `n = 1`).
pub fn build_u_delta_seeded(
    x: &SimplicialComplex,
    n: usize,
    delta: &[usize],
    budget: usize,
    seed: u64,
) -> Result<UDelta> {
    if n == 0 {
        return Err(Error::Invalid("dimension n must be positive".into()));
    }
    if delta.is_empty() || !x.contains(delta) {
        return Err(Error::Invalid(format!("{delta:?} is not a simplex of X")));
    }
    if budget == 0 {
        return Err(Error::BudgetExceeded("sample budget is 0".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed_for(seed, delta));
    let mut found: BTreeSet<(OrientedMatroid, OrientedMatroid)> = BTreeSet::new();
    let mut accepted = 0;
    for _ in 0..budget {
        let vectors = sample_embedding(&mut rng, x, n, delta);
        let t = realize(x, vectors.clone())?;
        if !validate_tangent(x, n, delta, &t).passed() {
            continue;
        }
        accepted += 1;
        if n == 1 {
            found.insert((t.clone(), t));
            continue;
        }
        for _ in 0..PROJECTIONS_PER_SAMPLE {
            let a = sample_projection(&mut rng, n);
            let y = realize(x, vectors.iter().map(|v| a.mul_vec(v)).collect())?;
            found.insert((t.clone(), y));
        }
    }
    if found.is_empty() {
        return Err(Error::BudgetExceeded(format!(
            "none of {budget} sampled embeddings of the star of {delta:?} satisfied the tangent conditions"
        )));
    }
    let elements: Vec<(OrientedMatroid, OrientedMatroid)> = found.into_iter().collect();
    let labels = (0..elements.len()).map(|i| format!("u{i}")).collect();
    let poset = Poset::from_fn(labels, |a, b| {
        elements[a].0.weakly_specializes_to(&elements[b].0, n + 1, n + 1)
            && elements[a].1.weakly_specializes_to(&elements[b].1, 2, 2)
    })?;
    Ok(UDelta { delta: delta.to_vec(), elements, poset, incomplete: true, samples_drawn: budget, samples_accepted: accepted })
}

/// The gluing map `U_Δ → U_Δ′` for `Δ ⊆ Δ′`: zero the star vertices of Δ outside the star
/// of Δ′, then revalidate as a vertex over Δ′.
pub fn glue_map(
    x: &SimplicialComplex,
    n: usize,
    delta: &[usize],
    delta2: &[usize],
    t: &OrientedMatroid,
    y: &OrientedMatroid,
) -> Result<YVertex> {
    if !delta.iter().all(|v| delta2.contains(v)) {
        return Err(Error::InvalidImage(format!("{delta:?} is not a face of {delta2:?}")));
    }
    let inner = x.star_vertices(delta2);
    let drop: BTreeSet<usize> = x.star_vertices(delta).difference(&inner).copied().collect();
    let image = YVertex { delta: delta2.to_vec(), t: t.zero_out(&drop), y: y.zero_out(&drop) };
    match validate_y_vertex(x, n, &image) {
        ValidationReport::Pass => Ok(image),
        ValidationReport::Fail { check, witness } => Err(Error::InvalidImage(format!("{check}: {witness}"))),
    }
}

/// `Cx(U_Δ) × D̄Δ` as the order complex of the product of `U_Δ` with the cofaces of Δ.
#[derive(Debug, Clone)]
pub struct LocalY {
    pub u_delta: UDelta,
    /// Vertex `i` is the pair (element of `U_Δ`, coface of Δ).
    pub vertices: Vec<(usize, Simplex)>,
    pub complex: SimplicialComplex,
}

pub fn build_local_y(x: &SimplicialComplex, n: usize, delta: &[usize], budget: usize) -> Result<LocalY> {
    let u = build_u_delta(x, n, delta, budget)?;
    let cofaces = x.star(delta);
    let vertices: Vec<(usize, Simplex)> =
        (0..u.elements.len()).flat_map(|i| cofaces.iter().map(move |c| (i, c.clone()))).collect();
    let labels = vertices.iter().map(|(i, c)| format!("u{i}x{}", barycenter_label(x, c))).collect();
    let poset = Poset::from_fn(labels, |a, b| {
        let ((i, c), (j, d)) = (&vertices[a], &vertices[b]);
        (i == j || u.poset.less(*i, *j)) && c.iter().all(|v| d.contains(v))
    })?;
    let complex = order_complex(&poset);
    Ok(LocalY { u_delta: u, vertices, complex })
}
