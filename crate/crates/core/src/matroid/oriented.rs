use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::sign::{Sign, SignVector};
use crate::error::{Error, Result};

/// An oriented matroid given by its covectors over an ordered ground set.
///
/// Covectors are kept in a sorted set, so two matroids over the same ground set are equal
/// exactly when their covector sets are. Construction does not enforce the axioms; use
/// [`check_axioms`] to validate data from outside.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrientedMatroid {
    elements: Vec<String>,
    covectors: BTreeSet<SignVector>,
}

impl OrientedMatroid {
    pub fn new(elements: Vec<String>, covectors: impl IntoIterator<Item = SignVector>) -> Result<Self> {
        let covectors: BTreeSet<SignVector> = covectors.into_iter().collect();
        if covectors.iter().any(|c| c.len() != elements.len()) {
            return Err(Error::GroundSetMismatch);
        }
        Ok(OrientedMatroid { elements, covectors })
    }

    /// The rank-0 matroid `{0}`.
    pub fn trivial(elements: Vec<String>) -> Self {
        let n = elements.len();
        OrientedMatroid { elements, covectors: BTreeSet::from([SignVector::zero(n)]) }
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn covectors(&self) -> &BTreeSet<SignVector> {
        &self.covectors
    }

    pub fn contains(&self, c: &SignVector) -> bool {
        self.covectors.contains(c)
    }

    pub fn element_index(&self, label: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == label)
    }

    fn same_ground(&self, other: &OrientedMatroid) -> Result<()> {
        if self.elements != other.elements {
            Err(Error::GroundSetMismatch)
        } else {
            Ok(())
        }
    }

    /// Elements on which some covector is nonzero.
    pub fn nonzero_elements(&self) -> BTreeSet<usize> {
        self.covectors.iter().flat_map(|c| c.support().collect::<Vec<_>>()).collect()
    }

    /// `S` is independent when for each `v ∈ S` some covector vanishes on `S ∖ {v}` but not on `v`.
    ///
    /// The tuple condition decouples per element, so each `cᵢ` is searched separately.
    pub fn is_independent(&self, subset: &[usize]) -> bool {
        subset.iter().all(|&k| {
            self.covectors.iter().any(|c| {
                !c.get(k).is_zero() && subset.iter().all(|&i| i == k || c.get(i).is_zero())
            })
        })
    }

    /// Size of a maximal independent subset, grown greedily in ground-set order.
    pub fn rank(&self) -> usize {
        let mut basis = Vec::new();
        for v in 0..self.len() {
            basis.push(v);
            if !self.is_independent(&basis) {
                basis.pop();
            }
        }
        basis.len()
    }

    /// `{v : c(v) = − ⇒ − ∈ c(S)}` over every covector `c`.
    pub fn convex_hull(&self, subset: &[usize]) -> BTreeSet<usize> {
        (0..self.len())
            .filter(|&v| {
                self.covectors
                    .iter()
                    .all(|c| c.get(v) != Sign::Minus || subset.iter().any(|&s| c.get(s) == Sign::Minus))
            })
            .collect()
    }

    /// `self ⇒ other`: every covector of `other` is a covector of `self`.
    pub fn is_strong_quotient(&self, other: &OrientedMatroid) -> Result<bool> {
        self.same_ground(other)?;
        Ok(other.covectors.is_subset(&self.covectors))
    }

    /// `self ⇝ other`: equal rank, and every covector of `other` is a zeroing of one of `self`.
    pub fn is_weak_specialization(&self, other: &OrientedMatroid) -> Result<bool> {
        self.same_ground(other)?;
        Ok(self.weakly_specializes_to(other, self.rank(), other.rank()))
    }

    /// Variant of [`Self::is_weak_specialization`] with precomputed ranks, for poset building.
    pub(crate) fn weakly_specializes_to(&self, other: &OrientedMatroid, rank_self: usize, rank_other: usize) -> bool {
        rank_self == rank_other
            && other.covectors.iter().all(|d| self.covectors.iter().any(|c| d.is_zeroing_of(c)))
    }

    /// Sets every covector entry at `positions` to zero.
    pub fn zero_out(&self, positions: &BTreeSet<usize>) -> OrientedMatroid {
        let covectors = self
            .covectors
            .iter()
            .map(|c| {
                SignVector(
                    c.0.iter()
                        .enumerate()
                        .map(|(i, &s)| if positions.contains(&i) { Sign::Zero } else { s })
                        .collect(),
                )
            })
            .collect();
        OrientedMatroid { elements: self.elements.clone(), covectors }
    }

    /// Some covector takes no `−` value (the zero covector excepted).
    pub fn has_nonnegative_covector(&self) -> bool {
        self.covectors.iter().any(|c| !c.is_zero() && c.0.iter().all(|&s| s != Sign::Minus))
    }

    pub fn to_json(&self) -> MatroidJson {
        MatroidJson {
            elements: self.elements.clone(),
            covectors: self.covectors.iter().map(ToString::to_string).collect(),
        }
    }

    pub fn from_json(j: &MatroidJson) -> Result<Self> {
        let covectors = j.covectors.iter().map(|s| SignVector::parse(s)).collect::<Result<Vec<_>>>()?;
        Self::new(j.elements.clone(), covectors)
    }
}

/// Wire form: `{"elements": [...], "covectors": ["+0-", ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatroidJson {
    pub elements: Vec<String>,
    pub covectors: Vec<String>,
}

/// Outcome of [`check_axioms`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum AxiomReport {
    Pass,
    Fail {
        axiom: u8,
        witness: Vec<String>,
        element: Option<usize>,
    },
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        matches!(self, AxiomReport::Pass)
    }

    pub fn failed_axiom(&self) -> Option<u8> {
        match self {
            AxiomReport::Pass => None,
            AxiomReport::Fail { axiom, .. } => Some(*axiom),
        }
    }
}

fn fail(axiom: u8, witness: &[&SignVector], element: Option<usize>) -> AxiomReport {
    AxiomReport::Fail { axiom, witness: witness.iter().map(|c| c.to_string()).collect(), element }
}

/// The sign pattern an elimination covector must follow at each element, or `None` if free.
pub(crate) fn elimination_pattern(c: &SignVector, d: &SignVector, v: usize) -> Vec<Option<Sign>> {
    (0..c.len())
        .map(|w| {
            if w == v {
                return Some(Sign::Zero);
            }
            let (a, b) = (c.get(w), d.get(w));
            if a.is_zero() && b.is_zero() {
                Some(Sign::Zero)
            } else if a != Sign::Minus && b != Sign::Minus {
                Some(Sign::Plus)
            } else if a != Sign::Plus && b != Sign::Plus {
                Some(Sign::Minus)
            } else {
                None
            }
        })
        .collect()
}

fn matches(e: &SignVector, pattern: &[Option<Sign>]) -> bool {
    pattern.iter().enumerate().all(|(w, p)| p.is_none_or(|s| e.get(w) == s))
}

/// Checks the four covector axioms in order and reports the first failure.
pub fn check_axioms(ground_size: usize, covectors: &BTreeSet<SignVector>) -> AxiomReport {
    let zero = SignVector::zero(ground_size);
    if let Some(bad) = covectors.iter().find(|c| c.len() != ground_size) {
        return fail(0, &[bad], None);
    }
    if !covectors.contains(&zero) {
        return fail(1, &[], None);
    }
    for c in covectors {
        if !covectors.contains(&-c) {
            return fail(2, &[c], None);
        }
    }
    for c in covectors {
        for d in covectors {
            let cd = c.compose(d).expect("lengths checked");
            if !covectors.contains(&cd) {
                return fail(3, &[c, d], None);
            }
        }
    }
    for c in covectors {
        for d in covectors {
            for v in 0..ground_size {
                if c.get(v) != Sign::Plus || d.get(v) != Sign::Minus {
                    continue;
                }
                let pattern = elimination_pattern(c, d, v);
                if !covectors.iter().any(|e| matches(e, &pattern)) {
                    return fail(4, &[c, d], Some(v));
                }
            }
        }
    }
    AxiomReport::Pass
}

impl OrientedMatroid {
    pub fn check_axioms(&self) -> AxiomReport {
        check_axioms(self.len(), &self.covectors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    }

    fn om(n: usize, cs: &[&str]) -> OrientedMatroid {
        OrientedMatroid::new(labels(n), cs.iter().map(|s| SignVector::parse(s).unwrap())).unwrap()
    }

    #[test]
    fn rank_zero_matroid() {
        let m = OrientedMatroid::trivial(labels(2));
        assert!(m.check_axioms().passed());
        assert_eq!(m.rank(), 0);
        assert!(m.nonzero_elements().is_empty());
        assert!(m.is_independent(&[]));
    }

    #[test]
    fn missing_negation_fails_axiom_two() {
        let m = om(1, &["0", "+"]);
        assert_eq!(m.check_axioms(), AxiomReport::Fail { axiom: 2, witness: vec!["+".into()], element: None });
    }

    #[test]
    fn missing_zero_fails_axiom_one() {
        assert_eq!(om(1, &["+", "-"]).check_axioms().failed_axiom(), Some(1));
    }

    #[test]
    fn missing_composition_fails_axiom_three() {
        // Two independent coordinates whose compositions are absent.
        let m = om(2, &["00", "+0", "-0", "0+", "0-"]);
        assert_eq!(m.check_axioms().failed_axiom(), Some(3));
    }

    #[test]
    fn elimination_failure() {
        // Closed under negation and composition, but (+,+) and (-,+) cannot be eliminated at 0.
        let m = om(2, &["00", "++", "--", "-+", "+-"]);
        assert_eq!(m.check_axioms().failed_axiom(), Some(4));
    }

    #[test]
    fn ground_set_mismatch() {
        let a = OrientedMatroid::trivial(labels(2));
        let b = OrientedMatroid::trivial(labels(3));
        assert_eq!(a.is_strong_quotient(&b), Err(Error::GroundSetMismatch));
        assert_eq!(a.is_weak_specialization(&b), Err(Error::GroundSetMismatch));
        assert!(OrientedMatroid::new(labels(2), [SignVector::zero(3)]).is_err());
    }

    #[test]
    fn parallel_elements_have_rank_one() {
        let m = om(2, &["00", "++", "--"]);
        assert!(m.check_axioms().passed());
        assert_eq!(m.rank(), 1);
        assert!(!m.is_independent(&[0, 1]));
        assert_eq!(m.convex_hull(&[0]), BTreeSet::from([0, 1]));
    }

    #[test]
    fn json_round_trip() {
        let m = om(2, &["00", "++", "--"]);
        assert_eq!(OrientedMatroid::from_json(&m.to_json()).unwrap(), m);
    }
}
