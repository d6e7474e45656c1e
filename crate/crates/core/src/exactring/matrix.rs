use std::fmt;

use super::ring::Ring;
use crate::error::{Error, Result};

/// Dense square matrix, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RingMatrix<R> {
    dim: usize,
    entries: Vec<R>,
}

impl<R: Ring> RingMatrix<R> {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        RingMatrix { dim, entries }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::NotSquare { rows: dim, cols: row.len() });
            }
            entries.extend(row);
        }
        Ok(RingMatrix { dim, entries })
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.dim + j]
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        Self::from_fn(self.dim, |i, j| {
            (0..self.dim).fold(R::zero(), |acc, l| {
                acc.add_ref(&self.get(i, l).mul_ref(rhs.get(l, j)))
            })
        })
    }

    pub fn map<S: Ring>(&self, f: impl FnMut(&R) -> S) -> RingMatrix<S> {
        RingMatrix { dim: self.dim, entries: self.entries.iter().map(f).collect() }
    }

    /// Contiguous block with top-left corner `(row, col)` and size `size`.
    pub fn block(&self, row: usize, col: usize, size: usize) -> Self {
        Self::from_fn(size, |i, j| self.get(row + i, col + j).clone())
    }
}

impl<R: Ring> fmt::Debug for RingMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.dim {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn rows_must_be_square() {
        let rows = vec![vec![BigInt::from(1), BigInt::from(2)], vec![BigInt::from(3)]];
        assert!(matches!(RingMatrix::from_rows(rows), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn product_with_identity() {
        let m = RingMatrix::from_fn(3, |i, j| BigInt::from((i * 3 + j) as i64));
        assert_eq!(m.mul(&RingMatrix::identity(3)), m);
        assert_eq!(m.transpose().get(0, 2), &BigInt::from(6));
        assert_eq!(m.block(1, 1, 2).get(1, 1), &BigInt::from(8));
    }
}
