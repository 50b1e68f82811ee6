//! Dense exact matrices and fraction-free elimination.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{common_denominator, Rational};
use crate::error::{Error, Result};

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows_with_cols(rows, cols)
    }

    /// Like [`QMatrix::from_rows`], but keeps the column count when `rows` is empty.
    pub fn from_rows_with_cols(rows: Vec<Vec<Rational>>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Dimension(format!("ragged row of length {} (expected {cols})", r.len())));
            }
            data.extend(r);
        }
        Ok(QMatrix { rows: n, cols, data })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| r.iter().map(|&x| Rational::from_integer(BigInt::from(x))))
            .collect();
        QMatrix { rows: rows.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Stacks `self` above `below`.
    pub fn vstack(&self, below: &QMatrix) -> Result<QMatrix> {
        if self.cols != below.cols {
            return Err(Error::Dimension("vstack column counts differ".into()));
        }
        let mut data = self.data.clone();
        data.extend(below.data.iter().cloned());
        Ok(QMatrix { rows: self.rows + below.rows, cols: self.cols, data })
    }

    pub fn rank(&self) -> usize {
        Echelon::reduce(self, None).pivots.len()
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(super::format_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Dense row-major integer matrix (boundary operators).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl ZMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ZMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows.iter().flat_map(|r| r.iter().map(|&x| BigInt::from(x))).collect();
        ZMatrix { rows: rows.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul(&self, other: &ZMatrix) -> ZMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = ZMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().cloned().map(Rational::from_integer).collect(),
        }
    }

    /// Exact integer determinant by fraction-free elimination (square matrices only).
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| self.data[i * n..(i + 1) * n].to_vec()).collect();
        let mut prev = BigInt::one();
        let mut sign = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        sign * prev
    }
}

impl std::ops::Index<(usize, usize)> for ZMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ZMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for ZMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ZMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.data[i * self.cols..(i + 1) * self.cols].iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Row echelon form of an integer-cleared (optionally augmented) system, produced by
/// Bareiss elimination. Columns are processed left to right; within a column the pivot is
/// the entry of largest magnitude among the unreduced rows, ties going to the lowest row.
pub(crate) struct Echelon {
    /// Echelon rows (only the first `pivots.len()` are meaningful), including the augmented column.
    rows: Vec<Vec<BigInt>>,
    /// Pivot column of each echelon row.
    pub(crate) pivots: Vec<usize>,
    cols: usize,
}

impl Echelon {
    pub(crate) fn reduce(a: &QMatrix, rhs: Option<&[Rational]>) -> Echelon {
        let cols = a.cols;
        let width = cols + usize::from(rhs.is_some());
        let mut rows: Vec<Vec<BigInt>> = (0..a.rows)
            .map(|i| {
                let mut r: Vec<Rational> = a.row(i).to_vec();
                if let Some(b) = rhs {
                    r.push(b[i].clone());
                }
                let d = common_denominator(r.iter());
                r.iter().map(|x| (x * Rational::from_integer(d.clone())).to_integer()).collect()
            })
            .collect();
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..width {
            if r == rows.len() {
                break;
            }
            let mut best: Option<usize> = None;
            for i in r..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                match best {
                    Some(b) if rows[b][c].abs() >= rows[i][c].abs() => {}
                    _ => best = Some(i),
                }
            }
            let Some(p) = best else { continue };
            rows.swap(r, p);
            let (head, tail) = rows.split_at_mut(r + 1);
            let pivot_row = &head[r];
            for row in tail.iter_mut() {
                if row[c].is_zero() {
                    for x in row[c + 1..].iter_mut() {
                        if !x.is_zero() {
                            *x = &*x * &pivot_row[c] / &prev;
                        }
                    }
                    continue;
                }
                let factor = row[c].clone();
                for j in c + 1..width {
                    let v = &pivot_row[c] * &row[j] - &factor * &pivot_row[j];
                    row[j] = v / &prev;
                }
                row[c] = BigInt::zero();
            }
            prev = rows[r][c].clone();
            pivots.push(c);
            r += 1;
        }
        Echelon { rows, pivots, cols }
    }

    /// `true` when some pivot lands in the augmented column.
    fn inconsistent(&self) -> bool {
        self.pivots.last().is_some_and(|&p| p == self.cols)
    }

    /// Back substitution with the given values of the free variables.
    fn back_substitute(&self, free_values: &[(usize, Rational)], homogeneous: bool) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.cols];
        for (j, v) in free_values {
            x[*j] = v.clone();
        }
        for (r, &p) in self.pivots.iter().enumerate().rev() {
            let row = &self.rows[r];
            let mut acc = if homogeneous || row.len() == self.cols {
                Rational::zero()
            } else {
                Rational::from_integer(row[self.cols].clone())
            };
            for j in p + 1..self.cols {
                if !row[j].is_zero() && !x[j].is_zero() {
                    acc -= Rational::from_integer(row[j].clone()) * &x[j];
                }
            }
            x[p] = acc / Rational::from_integer(row[p].clone());
        }
        x
    }

    fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            if p < self.cols {
                is_pivot[p] = true;
            }
        }
        (0..self.cols).filter(|&j| !is_pivot[j]).collect()
    }
}

/// Particular solution (free variables set to zero) and a kernel basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSolution {
    pub particular: Vec<Rational>,
    pub kernel: Vec<Vec<Rational>>,
}

/// Solves `A·x = b` exactly.
pub fn solve_linear(a: &QMatrix, b: &[Rational]) -> Result<LinearSolution> {
    if b.len() != a.rows {
        return Err(Error::Dimension(format!("rhs has length {} for {} rows", b.len(), a.rows)));
    }
    let ech = Echelon::reduce(a, Some(b));
    if ech.inconsistent() {
        return Err(Error::Infeasible);
    }
    let particular = ech.back_substitute(&[], false);
    let kernel = ech
        .free_columns()
        .into_iter()
        .map(|f| ech.back_substitute(&[(f, Rational::one())], true))
        .collect();
    Ok(LinearSolution { particular, kernel })
}

/// Kernel basis of `A` (one vector per free column).
pub fn kernel_basis(a: &QMatrix) -> Vec<Vec<Rational>> {
    let ech = Echelon::reduce(a, None);
    ech.free_columns()
        .into_iter()
        .map(|f| ech.back_substitute(&[(f, Rational::one())], true))
        .collect()
}

/// The unique minimiser of `Σ xⱼ²` subject to `A·x = b`, from the KKT system
/// `[[I, Aᵀ], [A, 0]]·(x, λ) = (0, b)`.
pub fn min_norm_solution(a: &QMatrix, b: &[Rational]) -> Result<Vec<Rational>> {
    if b.len() != a.rows {
        return Err(Error::Dimension(format!("rhs has length {} for {} rows", b.len(), a.rows)));
    }
    let (m, n) = (a.rows, a.cols);
    let mut kkt = QMatrix::zeros(n + m, n + m);
    for i in 0..n {
        kkt[(i, i)] = Rational::one();
    }
    for i in 0..m {
        for j in 0..n {
            let v = a[(i, j)].clone();
            if !v.is_zero() {
                kkt[(n + i, j)] = v.clone();
                kkt[(j, n + i)] = v;
            }
        }
    }
    let mut rhs = vec![Rational::zero(); n];
    rhs.extend(b.iter().cloned());
    let sol = solve_linear(&kkt, &rhs)?;
    // x is unique even when λ is not (rank-deficient A), so the particular solution suffices.
    Ok(sol.particular[..n].to_vec())
}

#[cfg(test)]
mod tests {
    use super::super::rational::{frac, int};
    use super::*;

    fn dot(a: &[Rational], b: &[Rational]) -> Rational {
        a.iter().zip(b).fold(Rational::zero(), |s, (x, y)| s + x * y)
    }

    #[test]
    fn solve_identity() {
        let a = QMatrix::identity(2);
        let s = solve_linear(&a, &[int(3), frac(-1, 2)]).unwrap();
        assert_eq!(s.particular, vec![int(3), frac(-1, 2)]);
        assert!(s.kernel.is_empty());
    }

    #[test]
    fn solve_underdetermined() {
        let a = QMatrix::from_i64(&[&[1, 1]]);
        let s = solve_linear(&a, &[int(1)]).unwrap();
        assert_eq!(s.particular, vec![int(1), int(0)]);
        assert_eq!(s.kernel, vec![vec![int(-1), int(1)]]);
    }

    #[test]
    fn solve_inconsistent() {
        let a = QMatrix::from_i64(&[&[1], &[2]]);
        assert_eq!(solve_linear(&a, &[int(1), int(3)]), Err(Error::Infeasible));
    }

    #[test]
    fn solve_rank_deficient_with_fractions() {
        let a = QMatrix::from_rows(vec![
            vec![frac(1, 2), int(1), int(0)],
            vec![int(1), int(2), int(0)],
            vec![int(0), int(3), frac(2, 3)],
        ])
        .unwrap();
        let b = vec![int(1), int(2), int(5)];
        let s = solve_linear(&a, &b).unwrap();
        assert_eq!(a.mul_vec(&s.particular), b);
        assert_eq!(s.kernel.len(), 1);
        assert!(a.mul_vec(&s.kernel[0]).iter().all(Zero::is_zero));
    }

    #[test]
    fn min_norm_examples() {
        let a = QMatrix::from_i64(&[&[1, 1]]);
        assert_eq!(min_norm_solution(&a, &[int(1)]).unwrap(), vec![frac(1, 2), frac(1, 2)]);
        let a = QMatrix::from_i64(&[&[2]]);
        assert_eq!(min_norm_solution(&a, &[int(3)]).unwrap(), vec![frac(3, 2)]);
        let a = QMatrix::from_i64(&[&[1, 1, 1]]);
        assert_eq!(min_norm_solution(&a, &[int(1)]).unwrap(), vec![frac(1, 3); 3]);
        let a = QMatrix::from_i64(&[&[1], &[1]]);
        assert_eq!(min_norm_solution(&a, &[int(1), int(2)]), Err(Error::Infeasible));
    }

    #[test]
    fn min_norm_with_redundant_rows() {
        let a = QMatrix::from_i64(&[&[1, 1, 0], &[2, 2, 0], &[0, 1, 1]]);
        let b = vec![int(1), int(2), int(0)];
        let x = min_norm_solution(&a, &b).unwrap();
        assert_eq!(a.mul_vec(&x), b);
        for k in kernel_basis(&a) {
            assert!(dot(&x, &k).is_zero(), "min-norm solution is orthogonal to the kernel");
        }
    }

    #[test]
    fn determinant_fraction_free() {
        let m = ZMatrix::from_i64(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]]);
        assert_eq!(m.determinant(), BigInt::from(6));
        let s = ZMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(s.determinant(), BigInt::from(-1));
    }

    #[test]
    fn rank_of_rank_two() {
        let a = QMatrix::from_i64(&[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(a.rank(), 2);
        assert_eq!(QMatrix::zeros(3, 3).rank(), 0);
    }
}
