use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::{MatroidJson, OrientedMatroid};
use crate::topology::{Simplex, SimplicialComplex};

/// A vertex `(Δ, t, y)` of the complex `Y` over a base complex `X`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct YVertex {
    pub delta: Simplex,
    pub t: OrientedMatroid,
    pub y: OrientedMatroid,
}

/// A vertex `(Δ, t, y, z)` of the complex `Z`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ZVertex {
    pub delta: Simplex,
    pub t: OrientedMatroid,
    pub y: OrientedMatroid,
    pub z: OrientedMatroid,
}

impl ZVertex {
    pub fn base(&self) -> YVertex {
        YVertex { delta: self.delta.clone(), t: self.t.clone(), y: self.y.clone() }
    }
}

/// Wire form of a vertex; `z` is absent for vertices of `Y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub delta: Vec<String>,
    pub t: MatroidJson,
    pub y: MatroidJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z: Option<MatroidJson>,
}

fn delta_from_labels(x: &SimplicialComplex, labels: &[String]) -> Result<Simplex> {
    let mut s = labels
        .iter()
        .map(|l| x.vertex_index(l).ok_or_else(|| Error::Parse(format!("unknown vertex {l:?}"))))
        .collect::<Result<Vec<_>>>()?;
    s.sort_unstable();
    Ok(s)
}

fn delta_to_labels(x: &SimplicialComplex, s: &[usize]) -> Vec<String> {
    s.iter().map(|&v| x.label(v).to_string()).collect()
}

impl YVertex {
    pub fn to_json(&self, x: &SimplicialComplex) -> VertexJson {
        VertexJson { delta: delta_to_labels(x, &self.delta), t: self.t.to_json(), y: self.y.to_json(), z: None }
    }

    pub fn from_json(x: &SimplicialComplex, j: &VertexJson) -> Result<Self> {
        Ok(YVertex {
            delta: delta_from_labels(x, &j.delta)?,
            t: OrientedMatroid::from_json(&j.t)?,
            y: OrientedMatroid::from_json(&j.y)?,
        })
    }
}

impl ZVertex {
    pub fn to_json(&self, x: &SimplicialComplex) -> VertexJson {
        VertexJson { z: Some(self.z.to_json()), ..self.base().to_json(x) }
    }

    pub fn from_json(x: &SimplicialComplex, j: &VertexJson) -> Result<Self> {
        let base = YVertex::from_json(x, j)?;
        let z = j.z.as_ref().ok_or_else(|| Error::Parse("missing field \"z\"".into()))?;
        Ok(ZVertex { delta: base.delta, t: base.t, y: base.y, z: OrientedMatroid::from_json(z)? })
    }
}

/// Outcome of a validation: the first failed check with a human-readable witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum ValidationReport {
    Pass,
    Fail { check: String, witness: String },
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        matches!(self, ValidationReport::Pass)
    }

    pub fn failed_check(&self) -> Option<&str> {
        match self {
            ValidationReport::Pass => None,
            ValidationReport::Fail { check, .. } => Some(check),
        }
    }
}

fn fail(check: &str, witness: impl Into<String>) -> ValidationReport {
    ValidationReport::Fail { check: check.into(), witness: witness.into() }
}

macro_rules! check {
    ($e:expr) => {
        if let r @ ValidationReport::Fail { .. } = $e {
            return r;
        }
    };
}

fn names(x: &SimplicialComplex, s: impl IntoIterator<Item = usize>) -> String {
    let v: Vec<&str> = s.into_iter().map(|i| x.label(i)).collect();
    format!("{{{}}}", v.join(","))
}

fn check_ground(x: &SimplicialComplex, name: &str, m: &OrientedMatroid) -> ValidationReport {
    if m.elements() != x.labels() {
        return fail("ground_set", format!("{name} is on {:?}, expected the vertices {:?}", m.elements(), x.labels()));
    }
    ValidationReport::Pass
}

/// Conditions on `(Δ, t)`: `Δ ∈ X`, `rank t = n + 1`, a nonnegative covector, support equal
/// to the vertices of the star of Δ, and for each simplex Δ′ of that star, independence of
/// its vertices with convex hull meeting the support exactly in them.
pub fn validate_tangent(x: &SimplicialComplex, n: usize, delta: &[usize], t: &OrientedMatroid) -> ValidationReport {
    if delta.is_empty() || !x.contains(delta) {
        return fail("delta", format!("{delta:?} is not a simplex of X"));
    }
    check!(check_ground(x, "t", t));
    let r = t.rank();
    if r != n + 1 {
        return fail("rank_t", format!("rank {r}, expected {}", n + 1));
    }
    if !t.has_nonnegative_covector() {
        return fail("positive_covector", "every nonzero covector has a − entry");
    }
    let support = t.nonzero_elements();
    let star = x.star_vertices(delta);
    if support != star {
        return fail(
            "condition_1",
            format!("nonzero elements {} differ from the star vertices {}", names(x, support), names(x, star)),
        );
    }
    for face in x.star(delta) {
        if !t.is_independent(&face) {
            return fail("condition_2_independent", format!("{} is dependent", names(x, face.iter().copied())));
        }
        let hull: BTreeSet<usize> = t.convex_hull(&face).intersection(&support).copied().collect();
        let own: BTreeSet<usize> = face.iter().copied().collect();
        if hull != own {
            return fail(
                "condition_2_hull",
                format!("hull of {} meets the support in {}", names(x, own), names(x, hull)),
            );
        }
    }
    ValidationReport::Pass
}

pub fn validate_y_vertex(x: &SimplicialComplex, n: usize, v: &YVertex) -> ValidationReport {
    check!(validate_tangent(x, n, &v.delta, &v.t));
    check!(check_ground(x, "y", &v.y));
    let r = v.y.rank();
    if r != 2 {
        return fail("rank_y", format!("rank {r}, expected 2"));
    }
    if !v.t.is_strong_quotient(&v.y).unwrap_or(false) {
        return fail("t_to_y", "some covector of y is not a covector of t");
    }
    ValidationReport::Pass
}

pub fn validate_z_vertex(x: &SimplicialComplex, n: usize, v: &ZVertex) -> ValidationReport {
    check!(validate_y_vertex(x, n, &v.base()));
    check!(check_ground(x, "z", &v.z));
    let r = v.z.rank();
    if r != 1 {
        return fail("rank_z", format!("rank {r}, expected 1"));
    }
    if !v.y.is_strong_quotient(&v.z).unwrap_or(false) {
        return fail("y_to_z", "some covector of z is not a covector of y");
    }
    ValidationReport::Pass
}

fn validate_chain<V>(
    x: &SimplicialComplex,
    columns: &[V],
    valid: impl Fn(&V) -> ValidationReport,
    rows: impl Fn(&V) -> Vec<(&'static str, &OrientedMatroid)>,
    delta: impl Fn(&V) -> &Simplex,
) -> ValidationReport {
    if columns.is_empty() {
        return fail("length", "a diagram needs at least one column");
    }
    for (i, c) in columns.iter().enumerate() {
        if let ValidationReport::Fail { check, witness } = valid(c) {
            return fail(&format!("column_{i}.{check}"), witness);
        }
    }
    for (i, w) in columns.windows(2).enumerate() {
        let (d0, d1) = (delta(&w[0]), delta(&w[1]));
        if !d0.iter().all(|v| d1.contains(v)) {
            return fail(
                "delta_chain",
                format!("{} ⊄ {} between columns {i} and {}", names(x, d0.clone()), names(x, d1.clone()), i + 1),
            );
        }
        for ((name, a), (_, b)) in rows(&w[0]).into_iter().zip(rows(&w[1])) {
            if !a.is_weak_specialization(b).unwrap_or(false) {
                return fail(&format!("{name}_specialization"), format!("columns {i} → {}", i + 1));
            }
        }
    }
    ValidationReport::Pass
}

/// Validates a diagram `(Δ_0 ⊆ … ⊆ Δ_k; t_0 ⇝ … ⇝ t_k; y_i; z_i)` column by column and
/// along the rows. Repeated columns are allowed, since `⇝` is reflexive.
pub fn validate_diagram(x: &SimplicialComplex, n: usize, columns: &[ZVertex]) -> ValidationReport {
    validate_chain(
        x,
        columns,
        |c| validate_z_vertex(x, n, c),
        |c| vec![("t", &c.t), ("y", &c.y), ("z", &c.z)],
        |c| &c.delta,
    )
}

/// [`validate_diagram`] for diagrams of `Y` (no `z` row).
pub fn validate_y_diagram(x: &SimplicialComplex, n: usize, columns: &[YVertex]) -> ValidationReport {
    validate_chain(x, columns, |c| validate_y_vertex(x, n, c), |c| vec![("t", &c.t), ("y", &c.y)], |c| &c.delta)
}
