use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{frac, int, kernel_basis, solve_linear, QMatrix, Rational};
use crate::topology::{
    boundary, cap, cup_power, is_homologous, pushforward, Chain, Cochain, LocalSystem, SimplicialComplex,
    SimplicialMap,
};

/// `𝒟 ⊗ 𝒪^{⊗(n−1)}` on `Y`, after checking both systems live on `y`.
pub fn twisted_system(y: &SimplicialComplex, n: usize, d: &LocalSystem, o: &LocalSystem) -> Result<LocalSystem> {
    for (name, s) in [("orientation system", d), ("fiber orientation system", o)] {
        s.validate(y).map_err(|e| Error::ComplexMismatch(format!("{name}: {e}")))?;
    }
    Ok(d.tensor(&o.power(n.saturating_sub(1))))
}

/// The data `(π : Y → X̃, Ω, [X̃])` a fixing cycle is measured against.
#[derive(Debug, Clone, Copy)]
pub struct FixingProblem<'a> {
    pub y: &'a SimplicialComplex,
    pub subdivision: &'a SimplicialComplex,
    pub pi: &'a SimplicialMap,
    pub omega: &'a Cochain,
    /// Fundamental class of `X̃`, possibly twisted by its orientation system.
    pub fundamental: &'a Chain,
}

impl FixingProblem<'_> {
    pub fn n(&self) -> usize {
        self.fundamental.degree()
    }

    fn pushed(&self, phi: &Chain) -> Result<Chain> {
        let power = cup_power(self.y, self.omega, self.n() - 1)?;
        let capped = cap(self.y, &power, phi)?;
        pushforward(self.y, self.pi, self.fundamental.system(), &capped)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum FixingReport {
    Pass,
    Fail { reason: String },
}

impl FixingReport {
    pub fn passed(&self) -> bool {
        matches!(self, FixingReport::Pass)
    }
}

/// Checks `∂φ = 0` and `π⋆(Ω^{n−1} ⌢ φ) ∼ [X̃]`.
pub fn verify_fixing_cycle(problem: &FixingProblem, phi: &Chain) -> Result<FixingReport> {
    let n = problem.n();
    if n == 0 || phi.degree() != 3 * n - 2 {
        return Err(Error::DegreeError(format!("a fixing cycle has degree {}, got {}", 3 * n.max(1) - 2, phi.degree())));
    }
    phi.check_in(problem.y)?;
    let fail = |r: &str| Ok(FixingReport::Fail { reason: r.into() });
    if !boundary(problem.y, phi)?.is_zero() {
        return fail("φ is not a cycle");
    }
    let image = problem.pushed(phi)?;
    if is_homologous(problem.subdivision, &image, problem.fundamental)?.is_none() {
        return fail("π⋆(Ω^{n-1} ⌢ φ) is not homologous to the fundamental class");
    }
    Ok(FixingReport::Pass)
}

#[derive(Debug, Clone)]
pub struct FixingSolution {
    pub phi: Chain,
    /// Dimension of the affine space of fixing cycles (as chains).
    pub dimension: usize,
}

/// Solves `∂φ = 0, π⋆(Ω^{n−1} ⌢ φ) − ∂w = [X̃]` for `φ` with coefficients in `system`.
/// Returns the pivot solution (free unknowns zero) and the dimension of the solution set.
pub fn find_fixing_cycle(problem: &FixingProblem, system: &LocalSystem) -> Result<FixingSolution> {
    let n = problem.n();
    if n == 0 {
        return Err(Error::DegreeError("the base must have positive dimension".into()));
    }
    let k = 3 * n - 2;
    let (y, xt) = (problem.y, problem.subdivision);
    let phis = y.simplices(k);
    let ws: &[Vec<usize>] = if n < xt.dim().unwrap_or(0) { xt.simplices(n + 1) } else { &[] };
    let mut columns: Vec<Vec<Rational>> = Vec::new();
    for s in phis {
        let e = Chain::from_terms(k, system.clone(), [(s.clone(), int(1))])?;
        let mut col = boundary(y, &e)?.to_vector(y)?;
        col.extend(problem.pushed(&e)?.to_vector(xt)?);
        columns.push(col);
    }
    let rows_b = y.count(k - 1);
    for s in ws {
        let e = Chain::from_terms(n + 1, problem.fundamental.system().clone(), [(s.clone(), int(-1))])?;
        let mut col = vec![int(0); rows_b];
        col.extend(boundary(xt, &e)?.to_vector(xt)?);
        columns.push(col);
    }
    let height = rows_b + xt.count(n);
    let a = QMatrix::from_rows_with_cols(columns, height)?.transpose();
    let mut rhs = vec![int(0); rows_b];
    rhs.extend(problem.fundamental.to_vector(xt)?);
    let sol = solve_linear(&a, &rhs).map_err(|_| Error::NotFound)?;
    let phi = Chain::from_vector(y, k, system.clone(), &sol.particular[..phis.len()]);
    let kernel: Vec<Vec<Rational>> = kernel_basis(&a).into_iter().map(|v| v[..phis.len()].to_vec()).collect();
    let dimension = if kernel.is_empty() { 0 } else { QMatrix::from_rows_with_cols(kernel, phis.len())?.rank() };
    Ok(FixingSolution { phi, dimension })
}

#[derive(Debug, Clone)]
pub struct PontrjaginCycle {
    pub index: usize,
    pub chain: Chain,
    pub is_cycle: bool,
}

/// `ζ_i = (−1)^i π⋆((Ω/2)^{n+2i−1} ⌢ φ)`, an `(n − 4i)`-chain on `X̃` with coefficients in the
/// given system (whose pullback must be the system of `φ`).
pub fn pontrjagin_cycle(
    y: &SimplicialComplex,
    subdivision: &SimplicialComplex,
    pi: &SimplicialMap,
    target_system: &LocalSystem,
    omega: &Cochain,
    phi: &Chain,
    i: usize,
) -> Result<PontrjaginCycle> {
    let k = phi.degree();
    if (k + 2) % 3 != 0 {
        return Err(Error::DegreeError(format!("degree {k} is not 3n − 2")));
    }
    let n = (k + 2) / 3;
    if n < 4 * i {
        return Err(Error::DegreeError(format!("p_{i} vanishes for dimension reasons (n = {n})")));
    }
    let half = omega.scale(&frac(1, 2));
    let power = cup_power(y, &half, n + 2 * i - 1)?;
    let capped = cap(y, &power, phi)?;
    let mut chain = pushforward(y, pi, target_system, &capped)?;
    if i % 2 == 1 {
        chain = chain.scale(&int(-1));
    }
    let is_cycle = chain.degree() == 0 || boundary(subdivision, &chain)?.is_zero();
    Ok(PontrjaginCycle { index: i, chain, is_cycle })
}
