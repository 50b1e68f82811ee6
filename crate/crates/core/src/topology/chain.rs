//! Chains and cochains with rank-one twisted rational coefficients.
//!
//! # Conventions
//!
//! All signs are fixed by the complex's global vertex order, and simplices are always
//! stored with increasing vertices `σ = [σ₀ < … < σ_k]`.
//!
//! * The coefficient of a chain or cochain on `σ` lives in the fiber of the local system
//!   over the least vertex `σ₀`. Moving it to the fiber over `w` multiplies by `s(σ₀, w)`.
//! * Boundary: `∂σ = Σᵢ (−1)ⁱ ∂ᵢσ`. The face `∂₀σ` has least vertex `σ₁`, so its term is
//!   transported by `s(σ₀, σ₁)`.
//! * Coboundary: `(δf)(σ) = Σᵢ (−1)ⁱ f(∂ᵢσ)`, with the `i = 0` value transported back by
//!   `s(σ₀, σ₁)`. On a single edge with sign −1 this gives `(δf)(ab) = −f(b) − f(a)`.
//! * Cup (Alexander–Whitney): `(a ⌣ b)(σ) = a(σ₀…σ_p) · s_b(σ₀, σ_p) · b(σ_p…σ_{p+q})`,
//!   with coefficients in the tensor product of the two systems.
//! * Cap: the cochain is evaluated on the back face,
//!   `a ⌢ σ = s_a(σ₀, σ_{k−p}) · a(σ_{k−p}…σ_k) · [σ₀…σ_{k−p}]`.
//!   With this choice `(a ⌣ b) ⌢ c = a ⌢ (b ⌢ c)` holds on the nose, and the boundary
//!   satisfies `∂(a ⌢ c) = a ⌢ ∂c + (−1)^{k−p} (δa ⌢ c)` for `c` of degree `k`.
//! * Pushforward: `f⋆σ = ε · s(f(σ₀), m) · [sorted f(σ)]` where `ε` is the sign of the
//!   sorting permutation and `m` the least image vertex; degenerate images vanish. The
//!   chain's system must be the pullback of the target system.
//! * Cochain pullback is adjoint to pushforward.

use std::collections::BTreeMap;
use std::marker::PhantomData;

use super::complex::{remove, Simplex, SimplicialComplex};
use super::local::{permutation_sort, LocalSystem, SimplicialMap};
use crate::error::{Error, Result};
use crate::linalg::{one, Rational};
use num_traits::Zero;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChainKind;
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CochainKind;

/// A finite rational combination of `degree`-simplices with coefficients in `system`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graded<K> {
    degree: usize,
    system: LocalSystem,
    terms: BTreeMap<Simplex, Rational>,
    kind: PhantomData<K>,
}

pub type Chain = Graded<ChainKind>;
pub type Cochain = Graded<CochainKind>;

fn twist(x: Rational, s: i32) -> Rational {
    if s < 0 {
        -x
    } else {
        x
    }
}

impl<K: Clone> Graded<K> {
    pub fn zero(degree: usize, system: LocalSystem) -> Self {
        Graded { degree, system, terms: BTreeMap::new(), kind: PhantomData }
    }

    pub fn from_terms(degree: usize, system: LocalSystem, terms: impl IntoIterator<Item = (Simplex, Rational)>) -> Result<Self> {
        let mut g = Self::zero(degree, system);
        for (s, c) in terms {
            g.add_term(s, c)?;
        }
        Ok(g)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn system(&self) -> &LocalSystem {
        &self.system
    }

    pub fn terms(&self) -> &BTreeMap<Simplex, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, s: &[usize]) -> Rational {
        self.terms.get(s).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `c·s`; the simplex is sorted first, without a sign change.
    pub fn add_term(&mut self, mut s: Simplex, c: Rational) -> Result<()> {
        s.sort_unstable();
        if s.len() != self.degree + 1 || s.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DegreeError(format!("{s:?} is not a {}-simplex", self.degree)));
        }
        self.add_sorted(s, c);
        Ok(())
    }

    fn add_sorted(&mut self, s: Simplex, c: Rational) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(s) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeError(format!("degrees {} and {} differ", self.degree, other.degree)));
        }
        if self.system != other.system {
            return Err(Error::SystemMismatch("coefficient systems differ".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_sorted(s.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-one()))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let mut out = Self::zero(self.degree, self.system.clone());
        if !k.is_zero() {
            out.terms = self.terms.iter().map(|(s, c)| (s.clone(), c * k)).collect();
        }
        out
    }

    /// Same coefficients, reinterpreted in another system.
    pub fn with_system(&self, system: LocalSystem) -> Self {
        Graded { degree: self.degree, system, terms: self.terms.clone(), kind: PhantomData }
    }

    /// Coefficient vector in the order of `x.simplices(degree)`.
    pub fn to_vector(&self, x: &SimplicialComplex) -> Result<Vec<Rational>> {
        self.check_in(x)?;
        let mut v = vec![Rational::zero(); x.count(self.degree)];
        for (s, c) in &self.terms {
            v[x.index_of(s).expect("checked")] = c.clone();
        }
        Ok(v)
    }

    pub fn from_vector(x: &SimplicialComplex, degree: usize, system: LocalSystem, v: &[Rational]) -> Self {
        let mut out = Self::zero(degree, system);
        for (s, c) in x.simplices(degree).iter().zip(v) {
            out.add_sorted(s.clone(), c.clone());
        }
        out
    }

    /// Every simplex is a simplex of `x`.
    pub fn check_in(&self, x: &SimplicialComplex) -> Result<()> {
        match self.terms.keys().find(|s| !x.contains(s)) {
            Some(s) => Err(Error::ComplexMismatch(format!("{s:?} is not a simplex of the complex"))),
            None => Ok(()),
        }
    }

    /// Terms on simplices of `x` only.
    pub fn restrict(&self, x: &SimplicialComplex) -> Self {
        let mut out = self.clone();
        out.terms.retain(|s, _| x.contains(s));
        out
    }
}

impl Cochain {
    /// The 0-cochain with value 1 on every vertex.
    pub fn unit(x: &SimplicialComplex) -> Cochain {
        let mut u = Cochain::zero(0, LocalSystem::trivial());
        for v in x.vertices() {
            u.add_sorted(vec![v], one());
        }
        u
    }

    /// Pairing `Σ a(σ)·c(σ)`; the two systems must agree so the product is untwisted.
    pub fn evaluate(&self, c: &Chain) -> Result<Rational> {
        if self.degree != c.degree {
            return Err(Error::DegreeError("evaluation needs equal degrees".into()));
        }
        if self.system != c.system {
            return Err(Error::SystemMismatch("evaluation needs equal systems".into()));
        }
        Ok(self.terms.iter().filter_map(|(s, a)| c.terms.get(s).map(|b| a * b)).sum())
    }
}

/// `∂c`; the input must have degree at least 1.
pub fn boundary(x: &SimplicialComplex, c: &Chain) -> Result<Chain> {
    if c.degree == 0 {
        return Err(Error::DegreeError("boundary of a 0-chain".into()));
    }
    c.check_in(x)?;
    let mut out = Chain::zero(c.degree - 1, c.system.clone());
    for (s, a) in &c.terms {
        for i in 0..s.len() {
            let mut sign = if i % 2 == 0 { 1 } else { -1 };
            if i == 0 {
                sign *= c.system.sign(s[0], s[1]);
            }
            out.add_sorted(remove(s, i), twist(a.clone(), sign));
        }
    }
    Ok(out)
}

/// `δa` on the simplices of `x`.
pub fn coboundary(x: &SimplicialComplex, a: &Cochain) -> Result<Cochain> {
    a.check_in(x)?;
    let mut out = Cochain::zero(a.degree + 1, a.system.clone());
    for s in x.simplices(a.degree + 1) {
        let mut v = Rational::zero();
        for i in 0..s.len() {
            let f = a.coeff(&remove(s, i));
            if f.is_zero() {
                continue;
            }
            let mut sign = if i % 2 == 0 { 1 } else { -1 };
            if i == 0 {
                sign *= a.system.sign(s[0], s[1]);
            }
            v += twist(f, sign);
        }
        out.add_sorted(s.clone(), v);
    }
    Ok(out)
}

/// Alexander–Whitney cup product.
pub fn cup(x: &SimplicialComplex, a: &Cochain, b: &Cochain) -> Result<Cochain> {
    a.check_in(x)?;
    b.check_in(x)?;
    let (p, q) = (a.degree, b.degree);
    let mut out = Cochain::zero(p + q, a.system.tensor(&b.system));
    for s in x.simplices(p + q) {
        let av = a.coeff(&s[..=p]);
        if av.is_zero() {
            continue;
        }
        let bv = b.coeff(&s[p..]);
        if bv.is_zero() {
            continue;
        }
        out.add_sorted(s.clone(), twist(av * bv, b.system.sign(s[0], s[p])));
    }
    Ok(out)
}

/// `k`-fold cup power, with `a⁰` the unit.
pub fn cup_power(x: &SimplicialComplex, a: &Cochain, k: usize) -> Result<Cochain> {
    let mut out = Cochain::unit(x);
    for _ in 0..k {
        out = cup(x, &out, a)?;
    }
    Ok(out)
}

/// Cap product, evaluating the cochain on back faces.
pub fn cap(x: &SimplicialComplex, a: &Cochain, c: &Chain) -> Result<Chain> {
    a.check_in(x)?;
    c.check_in(x)?;
    let (p, k) = (a.degree, c.degree);
    if p > k {
        return Err(Error::DegreeError(format!("cannot cap a {p}-cochain with a {k}-chain")));
    }
    let mut out = Chain::zero(k - p, a.system.tensor(&c.system));
    for (s, cv) in &c.terms {
        let av = a.coeff(&s[k - p..]);
        if av.is_zero() {
            continue;
        }
        out.add_sorted(s[..=k - p].to_vec(), twist(av * cv, a.system.sign(s[0], s[k - p])));
    }
    Ok(out)
}

/// `f⋆c` into a target carrying `target_system`, whose pullback must be `c`'s system.
pub fn pushforward(
    source: &SimplicialComplex,
    f: &SimplicialMap,
    target_system: &LocalSystem,
    c: &Chain,
) -> Result<Chain> {
    c.check_in(source)?;
    if target_system.pullback(source, f) != c.system.restrict(source) {
        return Err(Error::SystemMismatch("chain system is not the pullback of the target system".into()));
    }
    let mut out = Chain::zero(c.degree, target_system.clone());
    for (s, a) in &c.terms {
        if let Some((img, eps)) = f.oriented_image(s) {
            let sign = eps * target_system.sign(f.apply(s[0]), img[0]);
            out.add_sorted(img, twist(a.clone(), sign));
        }
    }
    Ok(out)
}

/// `f*a` on the simplices of `source`, with coefficients in the pulled-back system.
pub fn pullback_cochain(source: &SimplicialComplex, f: &SimplicialMap, a: &Cochain) -> Result<Cochain> {
    let system = a.system.pullback(source, f);
    let mut out = Cochain::zero(a.degree, system);
    for s in source.simplices(a.degree) {
        let img: Vec<usize> = s.iter().map(|&v| f.apply(v)).collect();
        if let Some((sorted, eps)) = permutation_sort(img) {
            let v = a.coeff(&sorted);
            if !v.is_zero() {
                let sign = eps * a.system.sign(sorted[0], f.apply(s[0]));
                out.add_sorted(s.clone(), twist(v, sign));
            }
        }
    }
    Ok(out)
}
