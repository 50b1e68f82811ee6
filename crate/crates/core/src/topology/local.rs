use std::collections::BTreeSet;

use super::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};

/// A rank-one local system with fiber ℚ, stored as the set of edges `(u, v)`, `u < v`,
/// whose transport sign is −1.
///
/// Transport from the fiber over `u` to the fiber over `v` multiplies by `sign(u, v)`,
/// which is symmetric and equals 1 on the diagonal.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LocalSystem {
    negative: BTreeSet<(usize, usize)>,
}

impl LocalSystem {
    pub fn trivial() -> Self {
        LocalSystem::default()
    }

    pub fn from_negative_edges(edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        LocalSystem { negative: edges.into_iter().map(|(u, v)| if u <= v { (u, v) } else { (v, u) }).filter(|(u, v)| u != v).collect() }
    }

    pub fn negative_edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.negative
    }

    pub fn is_trivial(&self) -> bool {
        self.negative.is_empty()
    }

    pub fn sign(&self, u: usize, v: usize) -> i32 {
        let key = if u <= v { (u, v) } else { (v, u) };
        if self.negative.contains(&key) {
            -1
        } else {
            1
        }
    }

    /// The tensor product: signs multiply.
    pub fn tensor(&self, other: &LocalSystem) -> LocalSystem {
        LocalSystem { negative: self.negative.symmetric_difference(&other.negative).copied().collect() }
    }

    /// `k`-fold tensor power; even powers are trivial.
    pub fn power(&self, k: usize) -> LocalSystem {
        if k % 2 == 0 {
            LocalSystem::trivial()
        } else {
            self.clone()
        }
    }

    /// Signs pulled back along a vertex map.
    pub fn pullback(&self, source: &SimplicialComplex, f: &SimplicialMap) -> LocalSystem {
        LocalSystem::from_negative_edges(
            source
                .simplices(1)
                .iter()
                .filter(|e| self.sign(f.apply(e[0]), f.apply(e[1])) < 0)
                .map(|e| (e[0], e[1])),
        )
    }

    /// Only the edges of `x`.
    pub fn restrict(&self, x: &SimplicialComplex) -> LocalSystem {
        LocalSystem { negative: self.negative.iter().filter(|&&(u, v)| x.contains(&[u, v])).copied().collect() }
    }

    /// Checks that the edges exist and that `s(a,b)·s(b,c) = s(a,c)` on every triangle.
    pub fn validate(&self, x: &SimplicialComplex) -> Result<()> {
        if let Some(&(u, v)) = self.negative.iter().find(|&&(u, v)| !x.contains(&[u, v])) {
            return Err(Error::InvalidLocalSystem(format!("({u}, {v}) is not an edge")));
        }
        for t in x.simplices(2) {
            if self.sign(t[0], t[1]) * self.sign(t[1], t[2]) != self.sign(t[0], t[2]) {
                return Err(Error::InvalidLocalSystem(format!("cocycle condition fails on {t:?}")));
            }
        }
        Ok(())
    }

    /// Vertex signs `g` with `g(u)·g(v) = sign(u, v)` on every edge of `x`, if the system is
    /// trivializable over `x`. Each component's least vertex gets `+1`.
    pub fn trivialization(&self, x: &SimplicialComplex) -> Option<Vec<i32>> {
        let n = x.labels().len();
        let mut adj = vec![Vec::new(); n];
        for e in x.simplices(1) {
            adj[e[0]].push(e[1]);
            adj[e[1]].push(e[0]);
        }
        let mut g = vec![0i32; n];
        for start in x.vertices() {
            if g[start] != 0 {
                continue;
            }
            g[start] = 1;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &v in &adj[u] {
                    let want = g[u] * self.sign(u, v);
                    if g[v] == 0 {
                        g[v] = want;
                        stack.push(v);
                    } else if g[v] != want {
                        return None;
                    }
                }
            }
        }
        Some(g.into_iter().map(|s| if s == 0 { 1 } else { s }).collect())
    }
}

/// Vertex map between complexes sending simplices onto simplices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialMap {
    map: Vec<usize>,
}

impl SimplicialMap {
    /// `map[v]` is the image of source vertex index `v`.
    pub fn new(source: &SimplicialComplex, target: &SimplicialComplex, map: Vec<usize>) -> Result<Self> {
        let f = SimplicialMap { map };
        f.validate(source, target)?;
        Ok(f)
    }

    /// Builds the map without checking it.
    pub fn unchecked(map: Vec<usize>) -> Self {
        SimplicialMap { map }
    }

    pub fn identity(x: &SimplicialComplex) -> Self {
        SimplicialMap { map: (0..x.labels().len()).collect() }
    }

    pub fn validate(&self, source: &SimplicialComplex, target: &SimplicialComplex) -> Result<()> {
        if self.map.len() != source.labels().len() {
            return Err(Error::InvalidMap("vertex map has the wrong length".into()));
        }
        for s in source.all_simplices() {
            let img = self.image(s);
            if !target.contains(&img) {
                return Err(Error::InvalidMap(format!(
                    "image of {:?} is not a simplex of the target",
                    s.iter().map(|&v| source.label(v)).collect::<Vec<_>>()
                )));
            }
        }
        Ok(())
    }

    pub fn apply(&self, v: usize) -> usize {
        self.map[v]
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.map
    }

    /// Sorted, deduplicated image of a simplex.
    pub fn image(&self, s: &[usize]) -> Simplex {
        let mut img: Simplex = s.iter().map(|&v| self.map[v]).collect();
        img.sort_unstable();
        img.dedup();
        img
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SimplicialMap) -> SimplicialMap {
        SimplicialMap { map: self.map.iter().map(|&v| other.map[v]).collect() }
    }

    /// Sorted image and the sign of the sorting permutation, or `None` when degenerate.
    pub fn oriented_image(&self, s: &[usize]) -> Option<(Simplex, i32)> {
        let img: Vec<usize> = s.iter().map(|&v| self.map[v]).collect();
        permutation_sort(img)
    }
}

/// Sorts distinct entries and returns the permutation sign; `None` on repeats.
pub fn permutation_sort(mut v: Vec<usize>) -> Option<(Vec<usize>, i32)> {
    let mut sign = 1;
    // Insertion sort counts inversions directly; simplices are short.
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((v, sign))
    }
}
