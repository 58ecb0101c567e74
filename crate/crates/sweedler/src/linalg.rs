//! Dense matrices with cyclotomic entries.
//!
//! This layer serves the structure checker and the invariant computations:
//! products, inverses, nullspaces, Kronecker products, traces. Elimination
//! here works over the cyclotomic field itself and is independent of the
//! rational solver buried inside `cyclo` — the two layers never call each
//! other.

use crate::cyclo::CycNumber;

/// A row-major dense matrix over cyclotomic numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<CycNumber>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![CycNumber::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, CycNumber::one());
        }
        m
    }

    /// Builds from row vectors; panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<CycNumber>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> CycNumber) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &CycNumber {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycNumber) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<CycNumber> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = CycNumber::zero();
            for k in 0..self.cols {
                let a = self.at(i, k);
                if !a.is_zero() {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        acc += &(a * b);
                    }
                }
            }
            acc
        })
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Matrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j) + other.at(i, j))
    }

    pub fn scale(&self, factor: &CycNumber) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j) * factor)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    /// Matrix–vector product.
    pub fn apply(&self, v: &[CycNumber]) -> Vec<CycNumber> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| {
                let mut acc = CycNumber::zero();
                for (k, x) in v.iter().enumerate() {
                    let a = self.at(i, k);
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    /// Kronecker product; block (i, j) of the result is `self[i][j] · other`.
    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        Matrix::from_fn(self.rows * other.rows, self.cols * other.cols, |i, j| {
            let a = self.at(i / other.rows, j / other.cols);
            if a.is_zero() {
                CycNumber::zero()
            } else {
                a * other.at(i % other.rows, j % other.cols)
            }
        })
    }

    pub fn trace(&self) -> CycNumber {
        assert_eq!(self.rows, self.cols, "trace of a non-square matrix");
        let mut acc = CycNumber::zero();
        for i in 0..self.rows {
            acc += self.at(i, i);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        (0..self.rows).all(|i| {
            (0..self.cols).all(|j| {
                let e = self.at(i, j);
                if i == j {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    /// Inverse by Gauss–Jordan elimination; `None` if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.at(r, col).is_zero())?;
            if pivot != col {
                for j in 0..n {
                    a.data.swap(col * n + j, pivot * n + j);
                    inv.data.swap(col * n + j, pivot * n + j);
                }
            }
            let scale = a.at(col, col).inverse().expect("pivot is nonzero");
            for j in 0..n {
                a.set(col, j, a.at(col, j) * &scale);
                inv.set(col, j, inv.at(col, j) * &scale);
            }
            for r in 0..n {
                if r == col || a.at(r, col).is_zero() {
                    continue;
                }
                let factor = a.at(r, col).clone();
                for j in 0..n {
                    let da = a.at(col, j) * &factor;
                    a.set(r, j, a.at(r, j) - &da);
                    let di = inv.at(col, j) * &factor;
                    inv.set(r, j, inv.at(r, j) - &di);
                }
            }
        }
        Some(inv)
    }

    /// Basis of the right nullspace `{x : self · x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<CycNumber>> {
        let mut a = self.clone();
        let (m, n) = (a.rows, a.cols);
        let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
        let mut row = 0;
        for col in 0..n {
            if row == m {
                break;
            }
            let Some(p) = (row..m).find(|&r| !a.at(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..n {
                    a.data.swap(row * n + j, p * n + j);
                }
            }
            let scale = a.at(row, col).inverse().expect("pivot is nonzero");
            for j in 0..n {
                a.set(row, j, a.at(row, j) * &scale);
            }
            for r in 0..m {
                if r == row || a.at(r, col).is_zero() {
                    continue;
                }
                let factor = a.at(r, col).clone();
                for j in 0..n {
                    let d = a.at(row, j) * &factor;
                    a.set(r, j, a.at(r, j) - &d);
                }
            }
            pivot_of_col[col] = Some(row);
            row += 1;
        }
        let mut basis = Vec::new();
        for free in 0..n {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut x = vec![CycNumber::zero(); n];
            x[free] = CycNumber::one();
            for (col, pivot) in pivot_of_col.iter().enumerate() {
                if let Some(r) = pivot {
                    x[col] = -a.at(*r, free);
                }
            }
            basis.push(x);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::CycNumber;

    fn c(n: i64) -> CycNumber {
        CycNumber::from_int(n)
    }

    #[test]
    fn product_and_identity() {
        let a = Matrix::from_rows(vec![vec![c(1), c(2)], vec![c(3), c(4)]]);
        let prod = a.mul(&Matrix::identity(2));
        assert_eq!(prod, a);
        let b = Matrix::from_rows(vec![vec![c(0), c(1)], vec![c(1), c(0)]]);
        let ab = a.mul(&b);
        assert_eq!(ab, Matrix::from_rows(vec![vec![c(2), c(1)], vec![c(4), c(3)]]));
    }

    #[test]
    fn inverse_with_cyclotomic_entries() {
        let i = CycNumber::i();
        let a = Matrix::from_rows(vec![vec![c(1), i.clone()], vec![c(0), c(1)]]);
        let inv = a.inverse().expect("unit determinant");
        assert_eq!(inv, Matrix::from_rows(vec![vec![c(1), -&i], vec![c(0), c(1)]]));
        assert!(a.mul(&inv).is_identity());
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let a = Matrix::from_rows(vec![vec![c(1), c(2)], vec![c(2), c(4)]]);
        assert!(a.inverse().is_none());
    }

    #[test]
    fn nullspace_of_rank_one_matrix() {
        let a = Matrix::from_rows(vec![vec![c(1), c(2)], vec![c(2), c(4)]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        for v in &ns {
            let image = a.apply(v);
            assert!(image.iter().all(CycNumber::is_zero));
        }
        let full_rank = Matrix::from_rows(vec![vec![c(1), c(0)], vec![c(1), c(1)]]);
        assert!(full_rank.nullspace().is_empty());
    }

    #[test]
    fn kronecker_blocks() {
        let a = Matrix::from_rows(vec![vec![c(1), c(2)]]);
        let b = Matrix::from_rows(vec![vec![c(3)], vec![c(5)]]);
        let k = a.kronecker(&b);
        assert_eq!(k.rows(), 2);
        assert_eq!(k.cols(), 2);
        assert_eq!(k, Matrix::from_rows(vec![vec![c(3), c(6)], vec![c(5), c(10)]]));
    }

    #[test]
    fn trace_and_transpose() {
        let i = CycNumber::i();
        let a = Matrix::from_rows(vec![vec![i.clone(), c(7)], vec![c(0), -&i]]);
        assert!(a.trace().is_zero());
        assert_eq!(a.transpose().at(0, 1), &c(0));
        assert_eq!(a.transpose().at(1, 0), &c(7));
    }
}
