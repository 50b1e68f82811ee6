use std::collections::HashMap;

use super::complex::{Simplex, SimplicialComplex};

/// The barycentric subdivision `X̃` of a complex `X`, with its open dual cells.
///
/// Vertex `i` of `X̃` is the barycenter of simplex `cells[i]` of `X`; vertices are ordered
/// by dimension, then lexicographically, so a flag `Δ₀ ⊂ … ⊂ Δ_k` is a simplex whose
/// vertices are already increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualCellStructure {
    base: SimplicialComplex,
    subdivision: SimplicialComplex,
    cells: Vec<Simplex>,
    index: HashMap<Simplex, usize>,
}

/// Label `[a,b,…]` for the barycenter of a simplex.
pub fn barycenter_label(x: &SimplicialComplex, s: &[usize]) -> String {
    let names: Vec<&str> = s.iter().map(|&v| x.label(v)).collect();
    format!("[{}]", names.join(","))
}

/// Builds `X̃` as the flag complex of the face poset.
pub fn barycentric_subdivision(x: &SimplicialComplex) -> DualCellStructure {
    let cells: Vec<Simplex> = x.all_simplices().cloned().collect();
    let index: HashMap<Simplex, usize> = cells.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
    let mut above: Vec<Vec<usize>> = vec![Vec::new(); cells.len()];
    for (b, s) in cells.iter().enumerate() {
        let k = s.len();
        for mask in 1u64..((1u64 << k) - 1) {
            let face: Simplex = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| s[i]).collect();
            above[index[&face]].push(b);
        }
    }
    let mut flags = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..cells.len()).map(|a| vec![a]).collect();
    while let Some(f) = stack.pop() {
        let top = *f.last().unwrap();
        for &b in &above[top] {
            let mut g = f.clone();
            g.push(b);
            stack.push(g);
        }
        flags.push(f);
    }
    let labels = cells.iter().map(|s| barycenter_label(x, s)).collect();
    let subdivision = SimplicialComplex::from_simplices(labels, flags).expect("flags are simplices");
    DualCellStructure { base: x.clone(), subdivision, cells, index }
}

impl DualCellStructure {
    pub fn base(&self) -> &SimplicialComplex {
        &self.base
    }

    pub fn subdivision(&self) -> &SimplicialComplex {
        &self.subdivision
    }

    /// The simplex of `X` whose barycenter is vertex `v` of `X̃`.
    pub fn cell(&self, v: usize) -> &Simplex {
        &self.cells[v]
    }

    pub fn cells(&self) -> &[Simplex] {
        &self.cells
    }

    /// The vertex of `X̃` at the barycenter of `s`.
    pub fn barycenter(&self, s: &[usize]) -> Option<usize> {
        self.index.get(s).copied()
    }

    /// The flag of simplices of `X` spelled by a simplex of `X̃`.
    pub fn flag(&self, s: &[usize]) -> Vec<Simplex> {
        s.iter().map(|&v| self.cells[v].clone()).collect()
    }

    /// The open dual cell `DΔ`: flags whose minimum is `Δ`.
    pub fn dual_cell(&self, delta: &[usize]) -> Vec<Simplex> {
        let Some(b) = self.barycenter(delta) else { return Vec::new() };
        self.subdivision.all_simplices().filter(|s| s[0] == b).cloned().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::complex::numbered_labels;

    #[test]
    fn subdivided_triangle() {
        let x = SimplicialComplex::from_simplices(numbered_labels(3), [vec![0, 1, 2]]).unwrap();
        let d = barycentric_subdivision(&x);
        assert_eq!(d.subdivision().f_vector(), vec![7, 12, 6]);
        assert_eq!(d.dual_cell(&[0, 1, 2]).len(), 1);
        assert_eq!(d.dual_cell(&[0]).len(), 6);
        let total: usize = x.all_simplices().map(|s| d.dual_cell(s).len()).sum();
        assert_eq!(total, d.subdivision().total_simplices());
    }

    #[test]
    fn edge_becomes_path() {
        let x = SimplicialComplex::from_simplices(numbered_labels(2), [vec![0, 1]]).unwrap();
        let d = barycentric_subdivision(&x);
        assert_eq!(d.subdivision().f_vector(), vec![3, 2]);
        assert_eq!(d.subdivision().label(2), "[v0,v1]");
        assert_eq!(d.dual_cell(&[0, 1]), vec![vec![2]]);
    }
}
