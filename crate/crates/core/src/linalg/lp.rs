//! Exact decision procedure for homogeneous strict systems.

use num_traits::{One, Signed, Zero};

use super::matrix::{kernel_basis, QMatrix};
use super::rational::Rational;

/// Decides whether some `c` satisfies `a_eq·c = 0` and `a_pos·c > 0` componentwise.
///
/// The equalities are eliminated by parametrising their kernel, and the strict
/// inequalities are homogenised to `≥ 1`, which is then decided by a phase-one simplex
/// run with Bland's rule over exact rationals.
pub fn feasible_strict(a_eq: &QMatrix, a_pos: &QMatrix) -> bool {
    let n = a_pos.cols().max(a_eq.cols());
    if a_pos.rows() == 0 {
        return true;
    }
    assert!(a_eq.rows() == 0 || a_eq.cols() == n, "matrices must share column count");
    let basis: Vec<Vec<Rational>> = if a_eq.rows() == 0 {
        (0..n)
            .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
            .collect()
    } else {
        kernel_basis(a_eq)
    };
    if basis.is_empty() {
        return false;
    }
    // B = a_pos · K, with the kernel vectors as the columns of K.
    let q = a_pos.rows();
    let r = basis.len();
    let b: Vec<Vec<Rational>> = (0..q)
        .map(|i| {
            let row = a_pos.row(i);
            basis
                .iter()
                .map(|k| row.iter().zip(k).fold(Rational::zero(), |s, (x, y)| s + x * y))
                .collect()
        })
        .collect();
    // Cheap exit: a zero row of B can never be made positive.
    if b.iter().any(|row| row.iter().all(Zero::is_zero)) {
        return false;
    }
    phase_one_feasible(&b, r)
}

/// Feasibility of `B·u ≥ 1` with `u` free, via `u = u⁺ − u⁻` and slack/artificial columns.
fn phase_one_feasible(b: &[Vec<Rational>], r: usize) -> bool {
    let q = b.len();
    // Columns: u⁺ (r), u⁻ (r), surplus (q), artificial (q); last entry is the rhs.
    let width = 2 * r + 2 * q;
    let mut t: Vec<Vec<Rational>> = (0..q)
        .map(|i| {
            let mut row = vec![Rational::zero(); width + 1];
            for j in 0..r {
                row[j] = b[i][j].clone();
                row[r + j] = -b[i][j].clone();
            }
            row[2 * r + i] = -Rational::one();
            row[2 * r + q + i] = Rational::one();
            row[width] = Rational::one();
            row
        })
        .collect();
    let mut basis: Vec<usize> = (0..q).map(|i| 2 * r + q + i).collect();
    let cost = |j: usize| -> Rational {
        if j >= 2 * r + q {
            Rational::one()
        } else {
            Rational::zero()
        }
    };
    loop {
        // Bland: smallest index with negative reduced cost.
        let mut entering = None;
        for j in 0..width {
            if basis.contains(&j) {
                continue;
            }
            let mut red = cost(j);
            for (i, &bi) in basis.iter().enumerate() {
                if !t[i][j].is_zero() {
                    red -= cost(bi) * &t[i][j];
                }
            }
            if red.is_negative() {
                entering = Some(j);
                break;
            }
        }
        let Some(j) = entering else { break };
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..q {
            if t[i][j].is_positive() {
                let ratio = &t[i][width] / &t[i][j];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // Phase one is bounded below by zero, so an entering column always has a leaving row.
        let (p, _) = leave.expect("phase-one objective is bounded");
        let pivot = t[p][j].clone();
        for x in t[p].iter_mut() {
            *x = &*x / &pivot;
        }
        let prow = t[p].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i == p || row[j].is_zero() {
                continue;
            }
            let f = row[j].clone();
            for (x, y) in row.iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        basis[p] = j;
    }
    basis
        .iter()
        .enumerate()
        .filter(|(_, &bi)| bi >= 2 * r + q)
        .all(|(i, _)| t[i][width].is_zero())
}
