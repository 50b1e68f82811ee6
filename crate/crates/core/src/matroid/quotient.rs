use std::collections::BTreeSet;

use super::oriented::OrientedMatroid;
use crate::error::{Error, Result};

/// All rank-1 strong quotients `{0, c, −c}` of `y`, one per nonzero covector pair, sorted.
pub fn rank1_strong_quotients(y: &OrientedMatroid) -> Vec<OrientedMatroid> {
    let zero = super::SignVector::zero(y.len());
    let set: BTreeSet<OrientedMatroid> = y
        .covectors()
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| {
            OrientedMatroid::new(y.elements().to_vec(), [zero.clone(), c.clone(), -c])
                .expect("same ground set")
        })
        .collect();
    set.into_iter().collect()
}

/// The specialization graph on the rank-1 quotients of a rank-2 matroid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberCircle {
    pub vertices: Vec<OrientedMatroid>,
    /// Covering relations `(i, j)` meaning `vertices[i] ⇝ vertices[j]`.
    pub edges: Vec<(usize, usize)>,
}

impl FiberCircle {
    /// Connected with every vertex of degree two.
    pub fn is_single_cycle(&self) -> bool {
        let n = self.vertices.len();
        if n < 3 || self.edges.len() != n {
            return false;
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        if adj.iter().any(|a| a.len() != 2) {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            if std::mem::replace(&mut seen[v], true) {
                continue;
            }
            stack.extend(adj[v].iter().copied());
        }
        seen.into_iter().all(|s| s)
    }
}

/// Covering weak specializations among the rank-1 quotients of `y`.
pub fn fiber_circle(y: &OrientedMatroid) -> Result<FiberCircle> {
    let r = y.rank();
    if r != 2 {
        return Err(Error::NotRankTwo(r));
    }
    let vertices = rank1_strong_quotients(y);
    let n = vertices.len();
    let specializes: Vec<Vec<bool>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| i != j && vertices[i].weakly_specializes_to(&vertices[j], 1, 1))
                .collect()
        })
        .collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if specializes[i][j] && !(0..n).any(|k| specializes[i][k] && specializes[k][j]) {
                edges.push((i, j));
            }
        }
    }
    Ok(FiberCircle { vertices, edges })
}
