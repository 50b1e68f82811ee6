use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::oriented::OrientedMatroid;
use super::sign::{Sign, SignVector};
use crate::error::{Error, Result};
use crate::linalg::{feasible_strict, serde_rational_vec, QMatrix, Rational};

/// Default cap on the ground-set size for covector enumeration.
pub const DEFAULT_ENUMERATION_BUDGET: usize = 12;

/// Labelled rational vectors of a common dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorConfiguration {
    elements: Vec<String>,
    vectors: Vec<Vec<Rational>>,
    dim: usize,
}

impl VectorConfiguration {
    pub fn new(elements: Vec<String>, vectors: Vec<Vec<Rational>>) -> Result<Self> {
        if elements.len() != vectors.len() {
            return Err(Error::Dimension("one vector per element required".into()));
        }
        let dim = vectors.first().map_or(0, Vec::len);
        if vectors.iter().any(|v| v.len() != dim) {
            return Err(Error::Dimension("vectors must share a dimension".into()));
        }
        Ok(VectorConfiguration { elements, vectors, dim })
    }

    /// Convenience constructor with labels `a, b, c, …` from integer vectors.
    pub fn from_i64(vectors: &[&[i64]]) -> Self {
        let elements = (0..vectors.len()).map(default_label).collect();
        let vectors = vectors.iter().map(|v| v.iter().map(|&x| crate::linalg::int(x)).collect()).collect();
        Self::new(elements, vectors).expect("uniform dimension")
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn vectors(&self) -> &[Vec<Rational>] {
        &self.vectors
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn to_json(&self) -> VectorsJson {
        VectorsJson {
            elements: self.elements.clone(),
            vectors: self.vectors.iter().map(|v| RationalRow(v.clone())).collect(),
        }
    }

    pub fn from_json(j: &VectorsJson) -> Result<Self> {
        Self::new(j.elements.clone(), j.vectors.iter().map(|r| r.0.clone()).collect())
    }

    /// Whether the sign pattern `s` on the first `s.len()` elements is achieved by a functional.
    fn realizes(&self, s: &[Sign]) -> bool {
        let mut eq = Vec::new();
        let mut pos = Vec::new();
        for (i, &sign) in s.iter().enumerate() {
            let v = &self.vectors[i];
            match sign {
                Sign::Zero => eq.push(v.clone()),
                Sign::Plus => pos.push(v.clone()),
                Sign::Minus => pos.push(v.iter().map(|x| -x).collect()),
            }
        }
        if pos.is_empty() {
            return true;
        }
        let a_eq = QMatrix::from_rows_with_cols(eq, self.dim).expect("uniform rows");
        let a_pos = QMatrix::from_rows_with_cols(pos, self.dim).expect("uniform rows");
        feasible_strict(&a_eq, &a_pos)
    }
}

pub(crate) fn default_label(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("e{i}")
    }
}

/// A row of rationals in string form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RationalRow(#[serde(with = "serde_rational_vec")] pub Vec<Rational>);

/// Wire form: `{"elements": [...], "vectors": [["1","0"], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VectorsJson {
    pub elements: Vec<String>,
    pub vectors: Vec<RationalRow>,
}

/// The oriented matroid of covectors of a vector configuration.
///
/// Sign vectors are grown one element at a time and a prefix is extended only when it is
/// itself realised by some functional, so infeasible branches are cut at the first element
/// where they fail.
pub fn from_vectors(config: &VectorConfiguration, budget: usize) -> Result<OrientedMatroid> {
    let n = config.elements.len();
    if n > budget {
        return Err(Error::BudgetExceeded(format!("{n} elements exceed the enumeration budget {budget}")));
    }
    let mut found = BTreeSet::new();
    let mut stack: Vec<Vec<Sign>> = vec![Vec::new()];
    while let Some(prefix) = stack.pop() {
        if prefix.len() == n {
            found.insert(SignVector(prefix));
            continue;
        }
        for s in [Sign::Minus, Sign::Zero, Sign::Plus] {
            let mut next = prefix.clone();
            next.push(s);
            if config.realizes(&next) {
                stack.push(next);
            }
        }
    }
    OrientedMatroid::new(config.elements.clone(), found)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vector_line() {
        let m = from_vectors(&VectorConfiguration::from_i64(&[&[1]]), 12).unwrap();
        let got: Vec<String> = m.covectors().iter().map(ToString::to_string).collect();
        assert_eq!(got, vec!["-", "0", "+"]);
    }

    #[test]
    fn zero_vector_is_a_loop() {
        let m = from_vectors(&VectorConfiguration::from_i64(&[&[1, 0], &[0, 0]]), 12).unwrap();
        assert!(m.covectors().iter().all(|c| c.get(1).is_zero()));
        assert_eq!(m.nonzero_elements(), BTreeSet::from([0]));
    }

    #[test]
    fn budget_is_enforced() {
        let cfg = VectorConfiguration::from_i64(&[&[1], &[1]]);
        assert!(matches!(from_vectors(&cfg, 1), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn vectors_json_round_trip() {
        let cfg = VectorConfiguration::new(
            vec!["p".into(), "q".into()],
            vec![vec![crate::linalg::frac(1, 2)], vec![crate::linalg::int(-3)]],
        )
        .unwrap();
        let s = serde_json::to_string(&cfg.to_json()).unwrap();
        assert_eq!(s, r#"{"elements":["p","q"],"vectors":[["1/2"],["-3"]]}"#);
        let back: VectorsJson = serde_json::from_str(&s).unwrap();
        assert_eq!(VectorConfiguration::from_json(&back).unwrap(), cfg);
    }
}
