use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{format_rational, Rational};

/// A polynomial in `p₁, p₂, …`; the key lists exponents of `p₁, p₂, …` without trailing zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Polynomial(pub BTreeMap<Vec<u32>, Rational>);

impl Polynomial {
    pub fn one() -> Self {
        Polynomial(BTreeMap::from([(Vec::new(), Rational::one())]))
    }

    /// The generator `p_k` (`k ≥ 1`).
    pub fn generator(k: usize) -> Self {
        let mut e = vec![0; k];
        e[k - 1] = 1;
        Polynomial(BTreeMap::from([(e, Rational::one())]))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        let slot = self.0.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.0.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &other.0 {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial(self.0.iter().map(|(e, c)| (e.clone(), -c)).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::default();
        for (a, x) in &self.0 {
            for (b, y) in &other.0 {
                let len = a.len().max(b.len());
                let mut e: Vec<u32> =
                    (0..len).map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)).collect();
                while e.last() == Some(&0) {
                    e.pop();
                }
                out.add_term(e, x * y);
            }
        }
        out
    }
}

fn monomial(e: &[u32]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| if k == 1 { format!("p{}", i + 1) } else { format!("p{}^{k}", i + 1) })
        .collect();
    parts.join("*")
}

/// ASCII form, monomials in descending lexicographic order of exponents: `p1^2 - p2`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.0.iter().rev().enumerate() {
            let (neg, abs) = (c.is_negative(), c.abs());
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = monomial(e);
            if mono.is_empty() {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", format_rational(&abs))?;
            }
        }
        Ok(())
    }
}

/// `1 + s₁ + s₂ + …` truncated at weight `degree`; component `k` has cohomological degree `4k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSeries {
    /// `components[k − 1]` is `s_k`.
    pub components: Vec<Polynomial>,
}

impl GradedSeries {
    /// The total class `1 + p₁ + … + p_d` with independent generators.
    pub fn total_pontrjagin(degree: usize) -> Self {
        GradedSeries { components: (1..=degree).map(Polynomial::generator).collect() }
    }

    pub fn degree(&self) -> usize {
        self.components.len()
    }

    /// The multiplicative inverse: `s̃_k = −Σ_{j=1..k} s_j s̃_{k−j}`, with `s̃₀ = 1`.
    pub fn inverse(&self) -> GradedSeries {
        let mut inv: Vec<Polynomial> = vec![Polynomial::one()];
        for k in 1..=self.degree() {
            let mut acc = Polynomial::default();
            for j in 1..=k {
                acc = acc.add(&self.components[j - 1].mul(&inv[k - j]));
            }
            inv.push(acc.neg());
        }
        GradedSeries { components: inv.split_off(1) }
    }

    /// The product, truncated at the smaller degree.
    pub fn mul(&self, other: &GradedSeries) -> GradedSeries {
        let d = self.degree().min(other.degree());
        let get = |s: &GradedSeries, k: usize| if k == 0 { Polynomial::one() } else { s.components[k - 1].clone() };
        GradedSeries {
            components: (1..=d)
                .map(|k| (0..=k).fold(Polynomial::default(), |acc, j| acc.add(&get(self, j).mul(&get(other, k - j)))))
                .collect(),
        }
    }
}

/// The dual Pontrjagin classes `p̃_k` as polynomials in the `p_j`, for `k = 1..=degree`.
pub fn invert_pontrjagin_series(degree: usize) -> Result<GradedSeries> {
    if degree == 0 {
        return Err(Error::Invalid("degree must be positive".into()));
    }
    Ok(GradedSeries::total_pontrjagin(degree).inverse())
}
