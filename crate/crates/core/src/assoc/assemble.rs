use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::udelta::{build_u_delta_seeded, glue_map, DEFAULT_SAMPLES, DEFAULT_SEED};
use super::vertex::{VertexJson, YVertex, ZVertex};
use crate::error::{Error, Result};
use crate::matroid::{order_complex_limited, rank1_strong_quotients, Poset};
use crate::topology::{barycentric_subdivision, ComplexJson, DualCellStructure, SimplicialComplex, SimplicialMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AssemblyOptions {
    /// Embeddings sampled per simplex of `X`.
    pub samples: usize,
    /// Hard cap on the number of simplices of each assembled complex.
    pub max_simplices: usize,
    pub seed: u64,
}

impl Default for AssemblyOptions {
    fn default() -> Self {
        AssemblyOptions { samples: DEFAULT_SAMPLES, max_simplices: 1_000_000, seed: DEFAULT_SEED }
    }
}

/// `Y` with its projection `π : Y → X̃` to the barycentric subdivision.
#[derive(Debug, Clone)]
pub struct YComplex {
    pub x: SimplicialComplex,
    pub n: usize,
    pub subdivision: DualCellStructure,
    pub vertices: Vec<YVertex>,
    /// The diagram order whose order complex is `complex`; vertex numbering extends it.
    pub order: Poset,
    pub complex: SimplicialComplex,
    pub pi: SimplicialMap,
    pub incomplete: bool,
    /// Glued images that failed revalidation and were left out.
    pub dropped_images: usize,
}

/// `Z` with its projection `ρ : Z → Y`.
#[derive(Debug, Clone)]
pub struct ZComplex {
    pub vertices: Vec<ZVertex>,
    pub order: Poset,
    pub complex: SimplicialComplex,
    pub rho: SimplicialMap,
}

#[derive(Debug, Clone)]
pub struct Associated {
    pub y: YComplex,
    pub z: ZComplex,
}

/// `"<barycenter label>:<k>"`, numbering the vertices over each barycenter.
fn label_vertices<'a>(sub: &DualCellStructure, deltas: impl Iterator<Item = &'a Vec<usize>>) -> Vec<String> {
    let mut seen: BTreeMap<String, usize> = BTreeMap::new();
    deltas
        .map(|d| {
            let base = sub.subdivision().label(sub.barycenter(d).expect("simplex of X")).to_string();
            let k = seen.entry(base.clone()).or_insert(0);
            *k += 1;
            format!("{base}:{}", *k - 1)
        })
        .collect()
}

/// Renumbers along a linear extension, so each simplex lists its diagram bottom to top.
fn sort_linearly<V: Clone>(vertices: Vec<V>, poset: Poset) -> (Vec<V>, Poset) {
    let order = poset.linear_extension();
    (order.iter().map(|&a| vertices[a].clone()).collect(), poset.permuted(&order))
}

/// Vertices are the sampled elements of every `U_Δ` together with all their valid glued
/// images over cofaces; `Y` is the order complex of the diagram order on them.
pub fn assemble_y(x: &SimplicialComplex, n: usize, opts: &AssemblyOptions) -> Result<YComplex> {
    let subdivision = barycentric_subdivision(x);
    let mut found: BTreeSet<(usize, Vec<usize>, YVertex)> = BTreeSet::new();
    let mut dropped = 0;
    for delta in x.all_simplices() {
        let u = build_u_delta_seeded(x, n, delta, opts.samples, opts.seed)?;
        for (t, y) in &u.elements {
            for coface in x.star(delta) {
                match glue_map(x, n, delta, &coface, t, y) {
                    Ok(v) => {
                        found.insert((v.delta.len(), v.delta.clone(), v));
                    }
                    Err(Error::InvalidImage(_)) => dropped += 1,
                    Err(e) => return Err(e),
                }
            }
        }
    }
    let vertices: Vec<YVertex> = found.into_iter().map(|(_, _, v)| v).collect();
    let labels = label_vertices(&subdivision, vertices.iter().map(|v| &v.delta));
    let poset = Poset::from_fn(labels, |a, b| {
        let (u, v) = (&vertices[a], &vertices[b]);
        u.delta.iter().all(|i| v.delta.contains(i))
            && u.t.weakly_specializes_to(&v.t, n + 1, n + 1)
            && u.y.weakly_specializes_to(&v.y, 2, 2)
    })?;
    let (vertices, poset) = sort_linearly(vertices, poset);
    let complex = order_complex_limited(&poset, opts.max_simplices)?;
    let map = vertices.iter().map(|v| subdivision.barycenter(&v.delta).expect("simplex of X")).collect();
    let pi = SimplicialMap::new(&complex, subdivision.subdivision(), map)?;
    Ok(YComplex {
        x: x.clone(),
        n,
        subdivision,
        vertices,
        order: poset,
        complex,
        pi,
        incomplete: true,
        dropped_images: dropped,
    })
}

/// Vertices `(Δ, t, y, z)` for every vertex of `Y` and rank-1 quotient `z` of `y`.
pub fn assemble_z(y: &YComplex, opts: &AssemblyOptions) -> Result<ZComplex> {
    let mut vertices = Vec::new();
    let mut base = Vec::new();
    for (i, v) in y.vertices.iter().enumerate() {
        for z in rank1_strong_quotients(&v.y) {
            vertices.push(ZVertex { delta: v.delta.clone(), t: v.t.clone(), y: v.y.clone(), z });
            base.push(i);
        }
    }
    let labels: Vec<String> = base.iter().map(|&i| y.complex.label(i).to_string()).collect();
    let mut counter: BTreeMap<usize, usize> = BTreeMap::new();
    let labels: Vec<String> = labels
        .iter()
        .zip(&base)
        .map(|(l, &i)| {
            let k = counter.entry(i).or_insert(0);
            *k += 1;
            format!("{l}:{}", *k - 1)
        })
        .collect();
    let poset = Poset::from_fn(labels, |a, b| {
        let (i, j) = (base[a], base[b]);
        (i == j || y.order.less(i, j)) && vertices[a].z.weakly_specializes_to(&vertices[b].z, 1, 1)
    })?;
    let order = poset.linear_extension();
    let base: Vec<usize> = order.iter().map(|&a| base[a]).collect();
    let (vertices, poset) = sort_linearly(vertices, poset);
    let complex = order_complex_limited(&poset, opts.max_simplices)?;
    let rho = SimplicialMap::new(&complex, &y.complex, base)?;
    Ok(ZComplex { vertices, order: poset, complex, rho })
}

pub fn assemble(x: &SimplicialComplex, n: usize, opts: &AssemblyOptions) -> Result<Associated> {
    let y = assemble_y(x, n, opts)?;
    let z = assemble_z(&y, opts)?;
    Ok(Associated { y, z })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledVertexJson {
    pub label: String,
    #[serde(flatten)]
    pub vertex: VertexJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssociatedJson {
    pub n: usize,
    pub incomplete: bool,
    pub x: ComplexJson,
    pub subdivision: ComplexJson,
    pub y: ComplexJson,
    pub z: ComplexJson,
    pub y_vertices: Vec<LabeledVertexJson>,
    pub z_vertices: Vec<LabeledVertexJson>,
    /// Vertex label maps of `π : Y → X̃` and `ρ : Z → Y`.
    pub pi: BTreeMap<String, String>,
    pub rho: BTreeMap<String, String>,
}

fn label_map(source: &SimplicialComplex, target: &SimplicialComplex, f: &SimplicialMap) -> BTreeMap<String, String> {
    (0..source.labels().len()).map(|v| (source.label(v).to_string(), target.label(f.apply(v)).to_string())).collect()
}

impl Associated {
    pub fn to_json(&self) -> AssociatedJson {
        let (y, z) = (&self.y, &self.z);
        AssociatedJson {
            n: y.n,
            incomplete: y.incomplete,
            x: y.x.to_json(),
            subdivision: y.subdivision.subdivision().to_json(),
            y: y.complex.to_json(),
            z: z.complex.to_json(),
            y_vertices: y
                .vertices
                .iter()
                .enumerate()
                .map(|(i, v)| LabeledVertexJson { label: y.complex.label(i).into(), vertex: v.to_json(&y.x) })
                .collect(),
            z_vertices: z
                .vertices
                .iter()
                .enumerate()
                .map(|(i, v)| LabeledVertexJson { label: z.complex.label(i).into(), vertex: v.to_json(&y.x) })
                .collect(),
            pi: label_map(&y.complex, y.subdivision.subdivision(), &y.pi),
            rho: label_map(&z.complex, &y.complex, &z.rho),
        }
    }
}
