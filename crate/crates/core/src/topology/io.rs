//! Label-based JSON forms for local systems, chains and cochains.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::chain::Graded;
use super::complex::SimplicialComplex;
use super::local::LocalSystem;
use crate::error::{Error, Result};
use crate::linalg::{serde_rational, Rational};

/// Separator between the two endpoint labels of an edge key.
pub const EDGE_SEPARATOR: &str = " -- ";

/// `"trivial"` or `{"edge_signs": {"a -- b": -1, ...}}` (only −1 edges are listed).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SystemJson {
    Named(String),
    Signs { edge_signs: BTreeMap<String, i32> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub simplex: Vec<String>,
    #[serde(with = "serde_rational")]
    pub coeff: Rational,
}

/// `{"degree": k, "system": ..., "terms": [{"simplex": [...], "coeff": "p/q"}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainJson {
    pub degree: usize,
    pub system: SystemJson,
    pub terms: Vec<TermJson>,
}

fn lookup(x: &SimplicialComplex, label: &str) -> Result<usize> {
    x.vertex_index(label).ok_or_else(|| Error::Parse(format!("unknown vertex {label:?}")))
}

impl LocalSystem {
    pub fn to_json(&self, x: &SimplicialComplex) -> SystemJson {
        if self.is_trivial() {
            return SystemJson::Named("trivial".into());
        }
        SystemJson::Signs {
            edge_signs: self
                .negative_edges()
                .iter()
                .map(|&(u, v)| (format!("{}{EDGE_SEPARATOR}{}", x.label(u), x.label(v)), -1))
                .collect(),
        }
    }

    pub fn from_json(x: &SimplicialComplex, j: &SystemJson) -> Result<LocalSystem> {
        let system = match j {
            SystemJson::Named(s) if s == "trivial" => LocalSystem::trivial(),
            SystemJson::Named(s) => return Err(Error::Parse(format!("unknown system {s:?}"))),
            SystemJson::Signs { edge_signs } => {
                let mut neg = Vec::new();
                for (k, &s) in edge_signs {
                    let (a, b) = k
                        .split_once(EDGE_SEPARATOR)
                        .ok_or_else(|| Error::Parse(format!("edge key {k:?} lacks {EDGE_SEPARATOR:?}")))?;
                    match s {
                        1 => {}
                        -1 => neg.push((lookup(x, a)?, lookup(x, b)?)),
                        _ => return Err(Error::Parse(format!("edge sign {s} is not ±1"))),
                    }
                }
                LocalSystem::from_negative_edges(neg)
            }
        };
        system.validate(x)?;
        Ok(system)
    }
}

impl<K: Clone> Graded<K> {
    pub fn to_json(&self, x: &SimplicialComplex) -> ChainJson {
        ChainJson {
            degree: self.degree(),
            system: self.system().to_json(x),
            terms: self
                .terms()
                .iter()
                .map(|(s, c)| TermJson { simplex: s.iter().map(|&v| x.label(v).to_string()).collect(), coeff: c.clone() })
                .collect(),
        }
    }

    /// Reads terms given in any vertex order; reordering a simplex does not change its sign.
    pub fn from_json(x: &SimplicialComplex, j: &ChainJson) -> Result<Self> {
        let system = LocalSystem::from_json(x, &j.system)?;
        let mut out = Self::zero(j.degree, system);
        for t in &j.terms {
            let s = t.simplex.iter().map(|l| lookup(x, l)).collect::<Result<Vec<_>>>()?;
            out.add_term(s, t.coeff.clone())?;
        }
        out.check_in(x)?;
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::frac;
    use crate::topology::chain::Chain;
    use crate::topology::standard::polygon;

    #[test]
    fn chain_round_trip() {
        let x = polygon(4);
        let sys = LocalSystem::from_negative_edges([(0, 1)]);
        let c = Chain::from_terms(1, sys, [(vec![1, 2], frac(-1, 3)), (vec![0, 3], frac(2, 1))]).unwrap();
        let j = c.to_json(&x);
        let s = serde_json::to_string(&j).unwrap();
        assert!(s.contains(r#""edge_signs":{"v0 -- v1":-1}"#), "{s}");
        let back: ChainJson = serde_json::from_str(&s).unwrap();
        assert_eq!(Chain::from_json(&x, &back).unwrap(), c);
    }

    #[test]
    fn trivial_system_is_named() {
        let x = polygon(3);
        assert_eq!(serde_json::to_string(&LocalSystem::trivial().to_json(&x)).unwrap(), r#""trivial""#);
    }
}
