use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::chain::{boundary, Chain};
use super::complex::{remove, SimplicialComplex};
use super::local::LocalSystem;
use crate::error::{Error, Result};
use crate::linalg::{homology_of_complex, solve_linear, HomologyGroup, QMatrix, Rational, ZMatrix};

/// Integer matrix of `∂_k : C_k → C_{k−1}` with twisted signs, in the complex's simplex order.
pub fn boundary_matrix(x: &SimplicialComplex, system: &LocalSystem, k: usize) -> ZMatrix {
    assert!(k >= 1, "boundary matrices start in degree 1");
    let mut m = ZMatrix::zeros(x.count(k - 1), x.count(k));
    for (j, s) in x.simplices(k).iter().enumerate() {
        for i in 0..s.len() {
            let mut sign: i64 = if i % 2 == 0 { 1 } else { -1 };
            if i == 0 {
                sign *= system.sign(s[0], s[1]) as i64;
            }
            let row = x.index_of(&remove(s, i)).expect("complex is face-closed");
            m[(row, j)] += BigInt::from(sign);
        }
    }
    m
}

fn boundary_matrices(x: &SimplicialComplex, system: &LocalSystem) -> (Vec<usize>, Vec<ZMatrix>) {
    let dims = x.f_vector();
    let maps = (1..dims.len()).map(|k| boundary_matrix(x, system, k)).collect();
    (dims, maps)
}

/// All integral homology groups with coefficients in `system`.
pub fn homology_groups(x: &SimplicialComplex, system: &LocalSystem) -> Result<Vec<HomologyGroup>> {
    system.validate(x)?;
    let (dims, maps) = boundary_matrices(x, system);
    homology_of_complex(&dims, &maps)
}

/// One homology group together with rational cycles representing a basis of `H_k(x; ℚ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyReport {
    pub degree: usize,
    pub betti: usize,
    #[serde(serialize_with = "ser_bigints")]
    pub torsion: Vec<BigInt>,
    #[serde(skip)]
    pub representatives: Vec<Chain>,
}

fn ser_bigints<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().serialize(s)
}

/// `H_k(x; system)`: Betti number and torsion over ℤ, plus representative cycles over ℚ.
pub fn homology(x: &SimplicialComplex, system: &LocalSystem, k: usize) -> Result<HomologyReport> {
    let groups = homology_groups(x, system)?;
    let Some(g) = groups.into_iter().nth(k) else {
        return Ok(HomologyReport { degree: k, betti: 0, torsion: Vec::new(), representatives: Vec::new() });
    };
    let cycles: Vec<Vec<Rational>> = if k == 0 {
        (0..x.count(0))
            .map(|i| (0..x.count(0)).map(|j| if i == j { Rational::from_integer(1.into()) } else { Rational::zero() }).collect())
            .collect()
    } else {
        crate::linalg::kernel_basis(&boundary_matrix(x, system, k).to_rational())
    };
    // Greedily keep cycles independent of the boundaries and of those already kept.
    let mut span: Vec<Vec<Rational>> = if k < x.dim().unwrap_or(0) {
        let d = boundary_matrix(x, system, k + 1).to_rational().transpose();
        (0..d.rows()).map(|i| d.row(i).to_vec()).collect()
    } else {
        Vec::new()
    };
    let n = x.count(k);
    let mut rank = QMatrix::from_rows_with_cols(span.clone(), n)?.rank();
    let mut reps = Vec::new();
    for z in cycles {
        if reps.len() == g.betti {
            break;
        }
        span.push(z.clone());
        let r = QMatrix::from_rows_with_cols(span.clone(), n)?.rank();
        if r > rank {
            rank = r;
            reps.push(Chain::from_vector(x, k, system.clone(), &z));
        } else {
            span.pop();
        }
    }
    Ok(HomologyReport { degree: k, betti: g.betti, torsion: g.torsion, representatives: reps })
}

/// A chain `w` with `∂w = c₁ − c₂`, if one exists.
pub fn is_homologous(x: &SimplicialComplex, c1: &Chain, c2: &Chain) -> Result<Option<Chain>> {
    let diff = c1.sub(c2)?;
    diff.check_in(x)?;
    let k = diff.degree();
    if diff.is_zero() {
        return Ok(Some(Chain::zero(k + 1, diff.system().clone())));
    }
    if x.count(k + 1) == 0 {
        return Ok(None);
    }
    let d = boundary_matrix(x, diff.system(), k + 1).to_rational();
    match solve_linear(&d, &diff.to_vector(x)?) {
        Ok(sol) => {
            let w = Chain::from_vector(x, k + 1, diff.system().clone(), &sol.particular);
            debug_assert_eq!(boundary(x, &w)?, diff);
            Ok(Some(w))
        }
        Err(Error::Infeasible) => Ok(None),
        Err(e) => Err(e),
    }
}

/// `∂c = 0` (degree-0 chains are cycles).
pub fn is_cycle(x: &SimplicialComplex, c: &Chain) -> Result<bool> {
    if c.degree() == 0 {
        return Ok(true);
    }
    Ok(boundary(x, c)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;
    use crate::topology::complex::numbered_labels;

    fn circle() -> SimplicialComplex {
        SimplicialComplex::from_simplices(numbered_labels(3), [vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap()
    }

    #[test]
    fn circle_with_trivial_and_twisted_coefficients() {
        let c = circle();
        let h = homology(&c, &LocalSystem::trivial(), 1).unwrap();
        assert_eq!(h.betti, 1);
        assert!(is_cycle(&c, &h.representatives[0]).unwrap());
        let tw = LocalSystem::from_negative_edges([(0, 1)]);
        let g = homology_groups(&c, &tw).unwrap();
        assert_eq!((g[0].betti, g[1].betti), (0, 0));
        assert_eq!(g[0].torsion, vec![BigInt::from(2)]);
    }

    #[test]
    fn points_are_homologous_when_connected() {
        let c = circle();
        let a = Chain::from_terms(0, LocalSystem::trivial(), [(vec![0], int(1))]).unwrap();
        let b = Chain::from_terms(0, LocalSystem::trivial(), [(vec![2], int(1))]).unwrap();
        let w = is_homologous(&c, &a, &b).unwrap().unwrap();
        assert_eq!(boundary(&c, &w).unwrap(), a.sub(&b).unwrap());
        assert_eq!(is_homologous(&c, &a, &a).unwrap().unwrap().degree(), 1);
    }
}
