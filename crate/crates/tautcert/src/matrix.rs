//! Dense matrices over an arbitrary entry type, with exact determinants
//! and inverses when the entries form a field.

use std::fmt;

use crate::error::AlgebraError;
use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
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

    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i * self.cols + j]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn map<U: Clone>(&self, mut f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|t| f(t)).collect(),
        }
    }

    /// Assembles a block matrix from a `g x g` grid of `n x n` blocks.
    pub fn from_blocks(blocks: &[Vec<Matrix<T>>]) -> Self {
        let g = blocks.len();
        assert!(g > 0 && blocks.iter().all(|row| row.len() == g));
        let n = blocks[0][0].rows;
        assert!(blocks
            .iter()
            .flatten()
            .all(|b| b.rows == n && b.cols == n));
        Matrix::from_fn(g * n, g * n, |i, j| {
            blocks[i / n][j / n].at(i % n, j % n).clone()
        })
    }

    fn require_square(&self) -> Result<(), AlgebraError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(AlgebraError::NonSquare { rows: self.rows, cols: self.cols })
        }
    }
}

impl<T: Field> Matrix<T> {
    /// Identity matrix in the field of the prototype element.
    pub fn identity_like(n: usize, proto: &T) -> Self {
        let zero = proto.zero_like();
        let one = proto.one_like();
        Matrix::from_fn(n, n, |i, j| if i == j { one.clone() } else { zero.clone() })
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.at(i, j);
                    if i == j {
                        *e == e.one_like()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn mul(&self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "matrix dimension mismatch");
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = self.at(i, 0).mul(rhs.at(0, j));
            for k in 1..self.cols {
                acc = acc.add(&self.at(i, k).mul(rhs.at(k, j)));
            }
            acc
        })
    }

    pub fn add(&self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j).add(rhs.at(i, j)))
    }

    pub fn conj_transpose(&self) -> Matrix<T> {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).conj())
    }

    /// Exact determinant by fraction-producing Gaussian elimination with
    /// partial pivoting on the first nonzero entry of each column.
    pub fn det(&self) -> Result<T, AlgebraError> {
        self.require_square()?;
        let n = self.rows;
        let proto = match self.data.first() {
            Some(t) => t.clone(),
            None => return Err(AlgebraError::NonSquare { rows: 0, cols: 0 }),
        };
        let mut m = self.clone();
        let mut det = proto.one_like();
        for col in 0..n {
            let pivot_row = match (col..n).find(|&r| !m.at(r, col).is_zero()) {
                Some(r) => r,
                None => return Ok(proto.zero_like()),
            };
            if pivot_row != col {
                for j in 0..n {
                    let a = m.at(pivot_row, j).clone();
                    let b = m.at(col, j).clone();
                    *m.at_mut(pivot_row, j) = b;
                    *m.at_mut(col, j) = a;
                }
                det = det.neg();
            }
            let pivot = m.at(col, col).clone();
            det = det.mul(&pivot);
            let pivot_inv = pivot.inv()?;
            for r in (col + 1)..n {
                if m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).mul(&pivot_inv);
                for j in col..n {
                    let sub = factor.mul(m.at(col, j));
                    *m.at_mut(r, j) = m.at(r, j).sub(&sub);
                }
            }
        }
        Ok(det)
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Matrix<T>, AlgebraError> {
        self.require_square()?;
        let n = self.rows;
        let proto = self
            .data
            .first()
            .cloned()
            .ok_or(AlgebraError::NonSquare { rows: 0, cols: 0 })?;
        let mut m = self.clone();
        let mut inv = Matrix::identity_like(n, &proto);
        for col in 0..n {
            let pivot_row = (col..n)
                .find(|&r| !m.at(r, col).is_zero())
                .ok_or(AlgebraError::NotInvertible)?;
            if pivot_row != col {
                for j in 0..n {
                    m.data.swap(pivot_row * n + j, col * n + j);
                    inv.data.swap(pivot_row * n + j, col * n + j);
                }
            }
            let pivot_inv = m.at(col, col).inv().map_err(|_| AlgebraError::NotInvertible)?;
            for j in 0..n {
                *m.at_mut(col, j) = m.at(col, j).mul(&pivot_inv);
                *inv.at_mut(col, j) = inv.at(col, j).mul(&pivot_inv);
            }
            for r in 0..n {
                if r == col || m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).clone();
                for j in 0..n {
                    let s = factor.mul(m.at(col, j));
                    *m.at_mut(r, j) = m.at(r, j).sub(&s);
                    let s = factor.mul(inv.at(col, j));
                    *inv.at_mut(r, j) = inv.at(r, j).sub(&s);
                }
            }
        }
        Ok(inv)
    }
}

impl<T: fmt::Display> Matrix<T> {
    /// Bracketed row-major text, `[[a,b],[c,d]]`.
    pub fn bracket_text(&self) -> String {
        let mut rows = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| self.data[i * self.cols + j].to_string())
                .collect();
            rows.push(format!("[{}]", row.join(",")));
        }
        format!("[{}]", rows.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rational, PrimeFieldElement, Rational};

    fn qm(entries: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(
            entries
                .iter()
                .map(|row| row.iter().map(|&v| rational(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn det_identity_and_2x2() {
        let id = Matrix::identity_like(6, &rational(0));
        assert_eq!(id.det().unwrap(), rational(1));
        // [[1, a],[b, 1]] -> 1 - ab with a=3, b=5
        let m = qm(&[&[1, 3], &[5, 1]]);
        assert_eq!(m.det().unwrap(), rational(-14));
    }

    #[test]
    fn det_needs_square() {
        let m = qm(&[&[1, 2, 3], &[4, 5, 6]]);
        assert!(matches!(m.det(), Err(AlgebraError::NonSquare { .. })));
    }

    #[test]
    fn det_with_zero_leading_pivot() {
        let m = qm(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.det().unwrap(), rational(-1));
    }

    #[test]
    fn inverse_round_trip() {
        let m = qm(&[&[2, 1], &[7, 4]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let singular = qm(&[&[1, 2], &[2, 4]]);
        assert!(singular.inverse().is_err());
    }

    #[test]
    fn prime_field_det() {
        let e = |v| PrimeFieldElement::new(v, 7);
        let m = Matrix::from_rows(vec![vec![e(1), e(2)], vec![e(3), e(4)]]);
        // 1*4 - 2*3 = -2 = 5 mod 7
        assert_eq!(m.det().unwrap(), e(5));
    }

    #[test]
    fn block_assembly() {
        let a = qm(&[&[1, 2], &[3, 4]]);
        let z = qm(&[&[0, 0], &[0, 0]]);
        let id = Matrix::identity_like(2, &rational(0));
        let m = Matrix::from_blocks(&[vec![a.clone(), z.clone()], vec![z, id]]);
        assert_eq!(m.rows(), 4);
        assert_eq!(*m.at(0, 1), rational(2));
        assert_eq!(*m.at(3, 3), rational(1));
        assert_eq!(m.det().unwrap(), rational(-2));
    }
}
