//! Small dense matrices over the rationals with exact Gaussian elimination.
//!
//! Everything here is sized for rank-7/8 problems; no sparsity, no pivoting
//! heuristics beyond the first nonzero.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::Rat;

/// Dense row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let term = a * &other[(k, j)];
                    out[(i, j)] += term;
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() {
                        acc += &self[(i, j)] * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    /// Solve `self * x = b`. `None` when the matrix is singular.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(self.rows, self.cols);
        assert_eq!(self.rows, b.len());
        let n = self.rows;
        let mut a = self.clone();
        let mut rhs = b.to_vec();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            if pivot != col {
                a.swap_rows(pivot, col);
                rhs.swap(pivot, col);
            }
            let inv = a[(col, col)].recip();
            for j in col..n {
                let v = &a[(col, j)] * &inv;
                a[(col, j)] = v;
            }
            let scaled = &rhs[col] * &inv;
            rhs[col] = scaled;
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].clone();
                for j in col..n {
                    let delta = &factor * &a[(col, j)];
                    a[(r, j)] -= delta;
                }
                let delta = &factor * &rhs[col];
                rhs[r] -= delta;
            }
        }
        Some(rhs)
    }

    /// Exact inverse. `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let scale = a[(col, col)].recip();
            for j in 0..n {
                let v = &a[(col, j)] * &scale;
                a[(col, j)] = v;
                let v = &inv[(col, j)] * &scale;
                inv[(col, j)] = v;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].clone();
                for j in 0..n {
                    let delta = &factor * &a[(col, j)];
                    a[(r, j)] -= delta;
                    let delta = &factor * &inv[(col, j)];
                    inv[(r, j)] -= delta;
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }
}

impl core::ops::Index<(usize, usize)> for RatMat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for RatMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

/// Euclidean pairing of two rational vectors.
pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    assert_eq!(a.len(), b.len());
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// `a - c * b` componentwise.
pub fn sub_scaled(a: &[Rat], c: &Rat, b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - c * y).collect()
}

/// Componentwise sum.
pub fn add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Componentwise difference.
pub fn sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn m(vals: &[&[i64]]) -> RatMat {
        RatMat::from_rows(vals.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    #[test]
    fn solve_and_inverse_agree() {
        let a = m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let b: Vec<Rat> = [1, 2, 3].iter().map(|&x| rat(x)).collect();
        let x = a.solve(&b).unwrap();
        assert_eq!(a.apply(&x), b);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), RatMat::identity(3));
        assert_eq!(inv.apply(&b), x);
    }

    #[test]
    fn singular_matrix_detected() {
        let a = m(&[&[1, 2], &[2, 4]]);
        assert!(a.solve(&[rat(1), rat(1)]).is_none());
        assert!(a.inverse().is_none());
    }
}
