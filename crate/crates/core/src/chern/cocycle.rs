use serde::Serialize;

use super::bundle::CircleBundle;
use crate::error::{Error, Result};
use crate::linalg::{format_rational, frac, int, min_norm_solution, QMatrix, Rational};
use crate::topology::{coboundary, permutation_sort, pullback_cochain, Chain, Cochain, Simplex};

/// `±1/m` on the edges of each `m`-gon fiber, signed so each oriented fiber integrates to 1.
pub fn fiber_theta(b: &CircleBundle) -> Cochain {
    let mut theta = Cochain::zero(1, b.pulled_orientation());
    for f in &b.fibers {
        let m = f.len() as i64;
        for (i, &p) in f.iter().enumerate() {
            let q = f[(i + 1) % f.len()];
            theta.add_term(vec![p, q], frac(if p < q { 1 } else { -1 }, m)).expect("edge");
        }
    }
    theta
}

/// Extends [`fiber_theta`] over each `ρ⁻¹(edge)` to a cocycle there, choosing the
/// minimum-norm solution of the cocycle constraints on the cross edges.
pub fn theta(b: &CircleBundle) -> Result<Cochain> {
    let fixed = fiber_theta(b);
    let mut out = fixed.clone();
    for e in b.y.simplices(1) {
        let (u, w) = (e[0], e[1]);
        let over = b.z.subcomplex(|s| s.iter().all(|&p| b.rho.apply(p) == u || b.rho.apply(p) == w));
        let cross = b.preimage_onto(1, e);
        let constraints = b.preimage_onto(2, e);
        if cross.is_empty() {
            return Err(Error::InfeasibleCocycle(format!("{} -- {} (no cross edges)", b.y.label(u), b.y.label(w))));
        }
        if constraints.is_empty() {
            continue;
        }
        let local_fixed = fixed.restrict(&over);
        let base = coboundary(&over, &local_fixed)?;
        let columns: Vec<Cochain> = cross
            .iter()
            .map(|c| {
                let unit = Cochain::from_terms(1, fixed.system().clone(), [(c.clone(), int(1))]).expect("edge");
                coboundary(&over, &unit)
            })
            .collect::<Result<_>>()?;
        let rows: Vec<Vec<Rational>> =
            constraints.iter().map(|t| columns.iter().map(|col| col.coeff(t)).collect()).collect();
        let rhs: Vec<Rational> = constraints.iter().map(|t| -base.coeff(t)).collect();
        let a = QMatrix::from_rows_with_cols(rows, cross.len())?;
        let x = min_norm_solution(&a, &rhs).map_err(|_| {
            Error::InfeasibleCocycle(format!("{} -- {}", b.y.label(u), b.y.label(w)))
        })?;
        for (c, v) in cross.iter().zip(x) {
            out.add_term(c.clone(), v)?;
        }
    }
    let d = coboundary(&b.z, &out)?;
    if let Some(s) = d.terms().keys().find(|s| b.rho.image(s).len() < 3) {
        return Err(Error::InfeasibleCocycle(format!("δΘ is nonzero on {s:?}, which lies over an edge")));
    }
    Ok(out)
}

/// Lift values disagreeing over a 2-simplex of `Y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiftSpread {
    pub simplex: Vec<String>,
    pub values: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct OmegaReport {
    pub omega: Cochain,
    /// Empty in strict mode (which errors instead).
    pub inconsistent: Vec<LiftSpread>,
    pub unlifted: Vec<Vec<String>>,
}

/// The 2-cocycle `Ω` on `Y` with `ρ*Ω = δΘ`, read off from lifts of each 2-simplex.
///
/// Strict mode fails on a simplex without lifts or with disagreeing lifts, and finally checks
/// `ρ*Ω = δΘ` on all of `Z`. Diagnostic mode uses the first lift and reports the rest.
pub fn omega(b: &CircleBundle, theta: &Cochain, strict: bool) -> Result<OmegaReport> {
    let d = coboundary(&b.z, theta)?;
    let mut out = Cochain::zero(2, b.orientation.clone());
    let mut inconsistent = Vec::new();
    let mut unlifted = Vec::new();
    let names = |s: &Simplex| s.iter().map(|&v| b.y.label(v).to_string()).collect::<Vec<_>>();
    let mut lifts: std::collections::BTreeMap<Simplex, Vec<Rational>> = Default::default();
    for t in b.z.simplices(2) {
        let img: Vec<usize> = t.iter().map(|&p| b.rho.apply(p)).collect();
        if let Some((sorted, eps)) = permutation_sort(img) {
            let sign = eps * b.orientation.sign(sorted[0], b.rho.apply(t[0]));
            let v = d.coeff(t);
            lifts.entry(sorted).or_default().push(if sign < 0 { -v } else { v });
        }
    }
    for s in b.y.simplices(2) {
        let Some(values) = lifts.get(s) else {
            if strict {
                return Err(Error::NoLift(names(s).join(",")));
            }
            unlifted.push(names(s));
            continue;
        };
        let first = values[0].clone();
        if values.iter().any(|v| *v != first) {
            if strict {
                return Err(Error::InconsistentLifts(names(s).join(",")));
            }
            let mut distinct: Vec<Rational> = values.clone();
            distinct.sort();
            distinct.dedup();
            inconsistent.push(LiftSpread { simplex: names(s), values: distinct.iter().map(format_rational).collect() });
        }
        out.add_term(s.clone(), first)?;
    }
    if strict && pullback_cochain(&b.z, &b.rho, &out)?.terms() != d.terms() {
        return Err(Error::InconsistentLifts("ρ*Ω differs from δΘ".into()));
    }
    Ok(OmegaReport { omega: out, inconsistent, unlifted })
}

/// `⟨Ω, c⟩` for a 2-cycle `c` of `Y` with coefficients in `𝒪`.
pub fn chern_number(omega: &Cochain, c: &Chain) -> Result<Rational> {
    if c.degree() != 2 {
        return Err(Error::DegreeError(format!("expected a 2-cycle, got degree {}", c.degree())));
    }
    omega.evaluate(c)
}
