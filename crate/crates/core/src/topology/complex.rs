use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simplex as a strictly increasing list of vertex indices.
pub type Simplex = Vec<usize>;

/// A finite abstract simplicial complex over labelled vertices.
///
/// Vertex indices define the global total order that fixes every orientation sign.
/// The label table may be larger than the vertex set, so subcomplexes can keep their
/// parent's indexing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    by_dim: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, usize>>,
}

impl SimplicialComplex {
    /// Face closure of `simplices`; every labelled vertex becomes a 0-simplex.
    pub fn from_simplices(labels: Vec<String>, simplices: impl IntoIterator<Item = Simplex>) -> Result<Self> {
        let all: Vec<Simplex> = (0..labels.len()).map(|v| vec![v]).collect();
        Self::closure(labels, all.into_iter().chain(simplices))
    }

    /// Face closure of `simplices` only; vertices outside them are absent.
    pub fn closure(labels: Vec<String>, simplices: impl IntoIterator<Item = Simplex>) -> Result<Self> {
        let n = labels.len();
        let mut sets: Vec<BTreeSet<Simplex>> = Vec::new();
        for mut s in simplices {
            s.sort_unstable();
            let before = s.len();
            s.dedup();
            if s.len() != before {
                return Err(Error::Invalid(format!("simplex {s:?} repeats a vertex")));
            }
            if s.is_empty() {
                continue;
            }
            if s.iter().any(|&v| v >= n) {
                return Err(Error::Invalid(format!("simplex {s:?} uses an unknown vertex")));
            }
            let d = s.len() - 1;
            if sets.len() <= d {
                sets.resize_with(d + 1, BTreeSet::new);
            }
            if sets[d].contains(&s) {
                continue;
            }
            // Insert all faces; subsets of a present simplex are already present.
            let k = s.len();
            for mask in 1u64..(1u64 << k) {
                let face: Simplex = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| s[i]).collect();
                sets[face.len() - 1].insert(face);
            }
        }
        let by_dim: Vec<Vec<Simplex>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        let index = by_dim
            .iter()
            .map(|l| l.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        Ok(SimplicialComplex { labels, by_dim, index })
    }

    /// Vertices and simplices given by label.
    pub fn from_labeled(vertices: Vec<String>, simplices: &[Vec<String>]) -> Result<Self> {
        let pos: HashMap<&str, usize> = vertices.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        if pos.len() != vertices.len() {
            return Err(Error::Invalid("duplicate vertex label".into()));
        }
        let simplices = simplices
            .iter()
            .map(|s| {
                s.iter()
                    .map(|l| pos.get(l.as_str()).copied().ok_or_else(|| Error::Invalid(format!("unknown vertex {l:?}"))))
                    .collect::<Result<Simplex>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_simplices(vertices, simplices)
    }

    pub fn empty() -> Self {
        SimplicialComplex { labels: Vec::new(), by_dim: Vec::new(), index: Vec::new() }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn is_empty(&self) -> bool {
        self.by_dim.is_empty()
    }

    /// Dimension, or `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.by_dim.len().checked_sub(1)
    }

    pub fn simplices(&self, k: usize) -> &[Simplex] {
        self.by_dim.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn count(&self, k: usize) -> usize {
        self.simplices(k).len()
    }

    pub fn index_of(&self, s: &[usize]) -> Option<usize> {
        let k = s.len().checked_sub(1)?;
        self.index.get(k)?.get(s).copied()
    }

    pub fn contains(&self, s: &[usize]) -> bool {
        self.index_of(s).is_some()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.simplices(0).iter().map(|s| s[0])
    }

    pub fn all_simplices(&self) -> impl Iterator<Item = &Simplex> {
        self.by_dim.iter().flatten()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.by_dim.iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.by_dim
            .iter()
            .enumerate()
            .map(|(k, l)| if k % 2 == 0 { l.len() as i64 } else { -(l.len() as i64) })
            .sum()
    }

    pub fn total_simplices(&self) -> usize {
        self.by_dim.iter().map(Vec::len).sum()
    }

    /// Simplices not properly contained in another simplex.
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        let mut covered: BTreeSet<&Simplex> = BTreeSet::new();
        let mut faces = Vec::new();
        for k in 1..self.by_dim.len() {
            for s in &self.by_dim[k] {
                for i in 0..s.len() {
                    faces.push(remove(s, i));
                }
            }
        }
        let face_set: BTreeSet<Simplex> = faces.into_iter().collect();
        let mut out = Vec::new();
        for l in self.by_dim.iter() {
            for s in l {
                if !face_set.contains(s) && covered.insert(s) {
                    out.push(s.clone());
                }
            }
        }
        out
    }

    /// Simplices containing `s` (the open star).
    pub fn star(&self, s: &[usize]) -> Vec<Simplex> {
        self.all_simplices().filter(|t| is_face(s, t)).cloned().collect()
    }

    /// Vertices of the closed star of `s`.
    pub fn star_vertices(&self, s: &[usize]) -> BTreeSet<usize> {
        self.star(s).into_iter().flatten().collect()
    }

    /// Faces of simplices containing `s` (the closed star), as a list of simplices.
    pub fn closed_star(&self, s: &[usize]) -> Vec<Simplex> {
        let top = self.star(s);
        let mut out: BTreeSet<Simplex> = BTreeSet::new();
        for t in top {
            let k = t.len();
            for mask in 1u64..(1u64 << k) {
                out.insert((0..k).filter(|i| mask >> i & 1 == 1).map(|i| t[i]).collect());
            }
        }
        out.into_iter().collect()
    }

    /// Subcomplex of simplices satisfying `keep` (which must be closed under faces),
    /// with the parent's vertex indexing.
    pub fn subcomplex(&self, keep: impl Fn(&Simplex) -> bool) -> SimplicialComplex {
        let kept: Vec<Simplex> = self.all_simplices().filter(|s| keep(s)).cloned().collect();
        Self::closure(self.labels.clone(), kept).expect("faces of valid simplices are valid")
    }

    pub fn to_json(&self) -> ComplexJson {
        let present: BTreeSet<usize> = self.vertices().collect();
        ComplexJson {
            vertices: present.iter().map(|&v| self.labels[v].clone()).collect(),
            simplices: self
                .maximal_simplices()
                .into_iter()
                .map(|s| s.into_iter().map(|v| self.labels[v].clone()).collect())
                .collect(),
        }
    }

    pub fn from_json(j: &ComplexJson) -> Result<Self> {
        Self::from_labeled(j.vertices.clone(), &j.simplices)
    }
}

/// `s` with its `i`-th vertex removed.
pub fn remove(s: &[usize], i: usize) -> Simplex {
    s.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect()
}

/// `true` when every vertex of `a` is a vertex of `b` (both sorted).
pub fn is_face(a: &[usize], b: &[usize]) -> bool {
    let mut it = b.iter();
    a.iter().all(|x| it.any(|y| y == x))
}

/// Wire form: `{"vertices": [...], "simplices": [[...], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub vertices: Vec<String>,
    pub simplices: Vec<Vec<String>>,
}

/// Labels `v0, v1, …`.
pub fn numbered_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}
