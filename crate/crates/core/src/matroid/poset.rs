use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::topology::SimplicialComplex;

/// A finite poset given by its strict order relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    less: BTreeSet<(usize, usize)>,
}

impl Poset {
    /// Validates irreflexivity, antisymmetry and transitivity of `less`.
    pub fn new(labels: Vec<String>, less: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let less: BTreeSet<(usize, usize)> = less.into_iter().collect();
        let n = labels.len();
        for &(a, b) in &less {
            if a >= n || b >= n {
                return Err(Error::NotAPoset(format!("pair ({a}, {b}) names an unknown element")));
            }
            if a == b {
                return Err(Error::NotAPoset(format!("{} < {} is reflexive", labels[a], labels[a])));
            }
            if less.contains(&(b, a)) {
                return Err(Error::NotAPoset(format!("{} and {} are mutually below each other", labels[a], labels[b])));
            }
        }
        for &(a, b) in &less {
            for &(_, c) in less.range((b, 0)..(b + 1, 0)) {
                if !less.contains(&(a, c)) {
                    return Err(Error::NotAPoset(format!(
                        "{} < {} < {} but not {} < {}",
                        labels[a], labels[b], labels[c], labels[a], labels[c]
                    )));
                }
            }
        }
        Ok(Poset { labels, less })
    }

    /// The poset of `0..n` ordered by `lt` (assumed a strict order; validated).
    pub fn from_fn(labels: Vec<String>, lt: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = labels.len();
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|&(a, b)| a != b && lt(a, b)).collect();
        Self::new(labels, pairs)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        self.less.contains(&(a, b))
    }

    pub fn relations(&self) -> &BTreeSet<(usize, usize)> {
        &self.less
    }

    /// Elements strictly above `a`.
    pub fn above(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.less.range((a, 0)..(a + 1, 0)).map(|&(_, b)| b)
    }

    /// A permutation listing the elements so that `a < b` implies `a` comes first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut below = vec![0usize; self.len()];
        for &(_, b) in &self.less {
            below[b] += 1;
        }
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&a| (below[a], a));
        order
    }

    /// The same poset with element `order[i]` renamed to `i`.
    pub fn permuted(&self, order: &[usize]) -> Poset {
        let mut new_index = vec![0; order.len()];
        for (i, &a) in order.iter().enumerate() {
            new_index[a] = i;
        }
        Poset {
            labels: order.iter().map(|&a| self.labels[a].clone()).collect(),
            less: self.less.iter().map(|&(a, b)| (new_index[a], new_index[b])).collect(),
        }
    }

    /// All chains `x₀ < … < x_k`, each listed bottom to top.
    pub fn chains(&self) -> Vec<Vec<usize>> {
        self.chains_limited(usize::MAX).expect("unbounded")
    }

    /// Like [`Poset::chains`], failing once more than `limit` chains have been produced.
    pub fn chains_limited(&self, limit: usize) -> Result<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        let mut stack: Vec<Vec<usize>> = (0..self.len()).rev().map(|a| vec![a]).collect();
        while let Some(c) = stack.pop() {
            let top = *c.last().unwrap();
            for b in self.above(top) {
                let mut next = c.clone();
                next.push(b);
                stack.push(next);
            }
            out.push(c);
            if out.len() > limit {
                return Err(Error::BudgetExceeded(format!("more than {limit} chains")));
            }
        }
        out.sort();
        Ok(out)
    }
}

/// The simplicial complex whose simplices are the chains of `p`, on `p`'s element indices.
pub fn order_complex(p: &Poset) -> SimplicialComplex {
    SimplicialComplex::from_simplices(p.labels.clone(), p.chains()).expect("chains have distinct elements")
}

/// [`order_complex`] with a cap on the number of simplices.
pub fn order_complex_limited(p: &Poset, limit: usize) -> Result<SimplicialComplex> {
    SimplicialComplex::from_simplices(p.labels.clone(), p.chains_limited(limit)?)
}
