use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense row-major matrix with explicit dimensions (so `0 x n` is representable).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<BigInt>;
pub type QMatrix = Matrix<BigRational>;

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds from rows; `cols` is needed when there are no rows.
    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Self {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r);
        }
        Matrix { rows: nrows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Matrix::from_fn(idx.len(), self.cols, |i, j| self.get(idx[i], j).clone())
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        Matrix::from_fn(self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }
}

impl<T> Mul for &Matrix<T>
where
    T: Clone + Zero,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc + self.get(i, k) * rhs.get(k, j);
            }
            acc
        })
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.data[i * self.cols + j].to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl IntMatrix {
    pub fn from_i64(rows: &[Vec<i64>], cols: usize) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(), cols)
    }

    pub fn to_rational(&self) -> QMatrix {
        self.map(|x| BigRational::from_integer(x.clone()))
    }

    /// Determinant by fraction-free elimination; square matrices only.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut prev = BigInt::one();
        let mut sign = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a.get(i, k).is_zero()) else {
                return BigInt::zero();
            };
            if p != k {
                a.swap_rows(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(k, k) * a.get(i, j) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
                a.set(i, k, BigInt::zero());
            }
            prev = a.get(k, k).clone();
        }
        if n == 0 {
            return BigInt::one();
        }
        sign * a.get(n - 1, n - 1)
    }
}

impl QMatrix {
    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for col in 0..a.cols {
            let Some(p) = (rank..a.rows).find(|&i| !a.get(i, col).is_zero()) else {
                continue;
            };
            a.swap_rows(p, rank);
            let pivot = a.get(rank, col).clone();
            for i in rank + 1..a.rows {
                if a.get(i, col).is_zero() {
                    continue;
                }
                let f = a.get(i, col) / &pivot;
                for j in col..a.cols {
                    let v = a.get(i, j) - &f * a.get(rank, j);
                    a.set(i, j, v);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Solves `x * self = b` for a row vector `x`, if a solution exists.
    pub fn solve_left(&self, b: &[BigRational]) -> Option<Vec<BigRational>> {
        // Transpose to A^T x^T = b^T and row-reduce the augmented system.
        let at = self.transpose();
        let n = at.cols;
        let m = at.rows;
        let mut aug = Matrix::from_fn(m, n + 1, |i, j| if j < n { at.get(i, j).clone() } else { b[i].clone() });
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..n {
            let Some(p) = (r..m).find(|&i| !aug.get(i, col).is_zero()) else {
                continue;
            };
            aug.swap_rows(p, r);
            let pv = aug.get(r, col).clone();
            for j in 0..=n {
                let v = aug.get(r, j) / &pv;
                aug.set(r, j, v);
            }
            for i in 0..m {
                if i == r || aug.get(i, col).is_zero() {
                    continue;
                }
                let f = aug.get(i, col).clone();
                for j in 0..=n {
                    let v = aug.get(i, j) - &f * aug.get(r, j);
                    aug.set(i, j, v);
                }
            }
            pivots.push(col);
            r += 1;
        }
        if (r..m).any(|i| !aug.get(i, n).is_zero()) {
            return None;
        }
        let mut x = vec![BigRational::zero(); n];
        for (k, &c) in pivots.iter().enumerate() {
            x[c] = aug.get(k, n).clone();
        }
        Some(x)
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }
}

pub fn is_unimodular(m: &IntMatrix) -> bool {
    m.rows() == m.cols() && m.determinant().abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_and_rank() {
        let m = IntMatrix::from_i64(&[vec![2, 4], vec![6, 8]], 2);
        assert_eq!(m.determinant(), BigInt::from(-8));
        assert_eq!(m.to_rational().rank(), 2);
        let z = IntMatrix::from_i64(&[vec![1, 2], vec![2, 4]], 2);
        assert_eq!(z.to_rational().rank(), 1);
        assert_eq!(IntMatrix::zeros(0, 3).to_rational().rank(), 0);
    }

    #[test]
    fn left_solve() {
        let m = IntMatrix::from_i64(&[vec![1, 1], vec![0, 2]], 2).to_rational();
        let b: Vec<BigRational> = [3, 7].iter().map(|&x| BigRational::from_integer(x.into())).collect();
        let x = m.solve_left(&b).unwrap();
        // x0 * (1,1) + x1 * (0,2) = (3,7)
        assert_eq!(x[0], BigRational::from_integer(3.into()));
        assert_eq!(x[1], BigRational::new(2.into(), 1.into()));
        let sing = IntMatrix::from_i64(&[vec![1, 1], vec![2, 2]], 2).to_rational();
        assert!(sing.solve_left(&b).is_none());
    }
}
