//! Smith normal form over the integers and integral homology of chain complexes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::matrix::ZMatrix;
use crate::error::{Error, Result};

/// `U·A·V = S` with `U`, `V` unimodular and `S` diagonal with `d₁ | d₂ | …`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub u: ZMatrix,
    pub s: ZMatrix,
    pub v: ZMatrix,
}

impl SmithForm {
    /// Nonzero diagonal entries of `S`, in order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.s.rows().min(self.s.cols()))
            .map(|i| self.s[(i, i)].clone())
            .take_while(|d| !d.is_zero())
            .collect()
    }
}

struct Reducer {
    a: Vec<Vec<BigInt>>,
    u: Option<Vec<Vec<BigInt>>>,
    v: Option<Vec<Vec<BigInt>>>,
}

fn identity_rows(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

impl Reducer {
    fn rows(&self) -> usize {
        self.a.len()
    }

    fn cols(&self) -> usize {
        self.a.first().map_or(0, Vec::len)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        if let Some(u) = &mut self.u {
            u.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in self.a.iter_mut() {
            row.swap(i, j);
        }
        if let Some(v) = &mut self.v {
            for row in v.iter_mut() {
                row.swap(i, j);
            }
        }
    }

    /// row_i += f · row_j
    fn add_row(&mut self, i: usize, j: usize, f: &BigInt) {
        fn apply(m: &mut [Vec<BigInt>], i: usize, j: usize, f: &BigInt) {
            let src = m[j].clone();
            for (x, y) in m[i].iter_mut().zip(&src) {
                if !y.is_zero() {
                    *x += f * y;
                }
            }
        }
        apply(&mut self.a, i, j, f);
        if let Some(u) = &mut self.u {
            apply(u, i, j, f);
        }
    }

    /// col_i += f · col_j
    fn add_col(&mut self, i: usize, j: usize, f: &BigInt) {
        fn apply(m: &mut [Vec<BigInt>], i: usize, j: usize, f: &BigInt) {
            for row in m.iter_mut() {
                if !row[j].is_zero() {
                    let d = f * &row[j];
                    row[i] += d;
                }
            }
        }
        apply(&mut self.a, i, j, f);
        if let Some(v) = &mut self.v {
            apply(v, i, j, f);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in self.a[i].iter_mut() {
            *x = -&*x;
        }
        if let Some(u) = &mut self.u {
            for x in u[i].iter_mut() {
                *x = -&*x;
            }
        }
    }

    /// Position of the smallest nonzero |entry| in the trailing block (first unit wins).
    fn smallest(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for j in t..self.cols() {
            for i in t..self.rows() {
                let x = &self.a[i][j];
                if x.is_zero() {
                    continue;
                }
                if x.abs().is_one() {
                    return Some((i, j));
                }
                match best {
                    Some((bi, bj)) if self.a[bi][bj].abs() <= x.abs() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }

    fn run(&mut self) {
        let n = self.rows().min(self.cols());
        for t in 0..n {
            let Some((i, j)) = self.smallest(t) else { break };
            self.swap_rows(t, i);
            self.swap_cols(t, j);
            loop {
                let mut dirty = false;
                for i in t + 1..self.rows() {
                    if self.a[i][t].is_zero() {
                        continue;
                    }
                    let q = self.a[i][t].div_floor(&self.a[t][t]);
                    self.add_row(i, t, &-q);
                    if !self.a[i][t].is_zero() {
                        self.swap_rows(t, i);
                        dirty = true;
                    }
                }
                for j in t + 1..self.cols() {
                    if self.a[t][j].is_zero() {
                        continue;
                    }
                    let q = self.a[t][j].div_floor(&self.a[t][t]);
                    self.add_col(j, t, &-q);
                    if !self.a[t][j].is_zero() {
                        self.swap_cols(t, j);
                        dirty = true;
                    }
                }
                if dirty {
                    continue;
                }
                // Row and column are clear; enforce divisibility of the trailing block.
                let p = self.a[t][t].clone();
                if !p.abs().is_one() {
                    let offender = (t + 1..self.rows())
                        .find(|&i| (t + 1..self.cols()).any(|j| !(&self.a[i][j] % &p).is_zero()));
                    if let Some(i) = offender {
                        self.add_row(t, i, &BigInt::one());
                        continue;
                    }
                }
                break;
            }
            if self.a[t][t].is_negative() {
                self.negate_row(t);
            }
        }
    }
}

fn to_rows(a: &ZMatrix) -> Vec<Vec<BigInt>> {
    (0..a.rows()).map(|i| (0..a.cols()).map(|j| a[(i, j)].clone()).collect()).collect()
}

fn from_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> ZMatrix {
    let mut m = ZMatrix::zeros(rows.len(), cols);
    for (i, r) in rows.into_iter().enumerate() {
        for (j, x) in r.into_iter().enumerate() {
            m[(i, j)] = x;
        }
    }
    m
}

/// Smith normal form with both transforms.
pub fn smith_normal_form(a: &ZMatrix) -> SmithForm {
    let mut r = Reducer { a: to_rows(a), u: Some(identity_rows(a.rows())), v: Some(identity_rows(a.cols())) };
    r.run();
    SmithForm {
        s: from_rows(r.a, a.cols()),
        u: from_rows(r.u.unwrap(), a.rows()),
        v: from_rows(r.v.unwrap(), a.cols()),
    }
}

/// Invariant factors only (no transforms), for homology computations.
pub fn invariant_factors(a: &ZMatrix) -> Vec<BigInt> {
    let mut r = Reducer { a: to_rows(a), u: None, v: None };
    r.run();
    (0..a.rows().min(a.cols()))
        .map(|i| r.a[i][i].clone())
        .take_while(|d| !d.is_zero())
        .collect()
}

/// One homology group `ℤ^betti ⊕ ⨁ ℤ/tᵢ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub degree: usize,
    pub betti: usize,
    #[serde(serialize_with = "ser_bigints")]
    pub torsion: Vec<BigInt>,
}

fn ser_bigints<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::Serialize;
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().serialize(s)
}

/// Homology of `C_top → … → C_1 → C_0`, where `chain_dims[k] = rank C_k` and
/// `boundaries[k]` is the matrix of `∂_{k+1}: C_{k+1} → C_k`.
pub fn homology_of_complex(chain_dims: &[usize], boundaries: &[ZMatrix]) -> Result<Vec<HomologyGroup>> {
    if chain_dims.is_empty() {
        return Ok(Vec::new());
    }
    if boundaries.len() + 1 != chain_dims.len() {
        return Err(Error::Dimension("need one boundary map per positive degree".into()));
    }
    for (k, d) in boundaries.iter().enumerate() {
        if d.rows() != chain_dims[k] || d.cols() != chain_dims[k + 1] {
            return Err(Error::Dimension(format!("boundary ∂_{} has the wrong shape", k + 1)));
        }
    }
    for k in 1..boundaries.len() {
        if !boundaries[k - 1].mul(&boundaries[k]).is_zero() {
            return Err(Error::NotAComplex(k + 1));
        }
    }
    let factors: Vec<Vec<BigInt>> = boundaries.iter().map(invariant_factors).collect();
    Ok((0..chain_dims.len())
        .map(|k| {
            let rank_out = if k == 0 { 0 } else { factors[k - 1].len() };
            let rank_in = factors.get(k).map_or(0, Vec::len);
            let torsion = factors
                .get(k)
                .map(|f| f.iter().filter(|d| !d.is_one()).cloned().collect())
                .unwrap_or_default();
            HomologyGroup { degree: k, betti: chain_dims[k] - rank_out - rank_in, torsion }
        })
        .collect())
}
