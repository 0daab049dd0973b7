//! Dense matrices over exact rationals.
//!
//! Entries are `BigRational`, which normalizes to lowest terms with a
//! positive denominator, so `==` on matrices is exact value equality.

use crate::rational::Rational;
use num_traits::{Signed, ToPrimitive, Zero};

/// A dense rows x cols matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::from_integer(1.into());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Convenience constructor from integer literals.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| crate::rational::rat(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Side length of a square matrix.
    pub fn order(&self) -> usize {
        debug_assert_eq!(self.rows, self.cols, "order() on a non-square matrix");
        self.rows
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn has_zero_diagonal(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| self[(i, i)].is_zero())
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

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let prod = a * b;
                        out[(i, j)] += prod;
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * factor).collect(),
        }
    }

    /// Largest absolute entry, as a float. Zero for an empty matrix.
    pub fn max_abs_f64(&self) -> f64 {
        self.data
            .iter()
            .map(|x| x.abs().to_f64().unwrap_or(f64::INFINITY))
            .fold(0.0, f64::max)
    }

    /// Row-major float rendering of the entries.
    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self[(i, j)].to_f64().unwrap_or(f64::NAN))
                    .collect()
            })
            .collect()
    }

    /// Reduced row echelon form together with the pivot column indices.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&i| !m[(i, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m[(row, col)].recip();
            for j in col..m.cols {
                let v = &m[(row, j)] * &inv;
                m[(row, j)] = v;
            }
            for i in 0..m.rows {
                if i != row && !m[(i, col)].is_zero() {
                    let factor = m[(i, col)].clone();
                    for j in col..m.cols {
                        let v = &m[(i, j)] - &factor * &m[(row, j)];
                        m[(i, j)] = v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    /// Exact rank via Gaussian elimination.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Exact inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rational::from_integer(1.into());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(k, &c)| c != k) {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    /// Columns `cols` of `self`, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut out = Self::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (k, &c) in cols.iter().enumerate() {
                out[(i, k)] = self[(i, c)].clone();
            }
        }
        out
    }

    /// Rows `0..count` of `self`.
    pub fn top_rows(&self, count: usize) -> Self {
        assert!(count <= self.rows);
        Self {
            rows: count,
            cols: self.cols,
            data: self.data[..count * self.cols].to_vec(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for ExactMatrix {
    type Output = Rational;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ExactMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl std::fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| crate::rational::format_rational(&self[(i, j)]))
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, rat};

    #[test]
    fn multiply_and_identity() {
        let a = ExactMatrix::from_int_rows(&[&[1, 2], &[3, 4]]);
        let i = ExactMatrix::identity(2);
        assert_eq!(a.mul(&i), a);
        let b = ExactMatrix::from_int_rows(&[&[0, 1], &[1, 0]]);
        let ab = a.mul(&b);
        assert_eq!(ab, ExactMatrix::from_int_rows(&[&[2, 1], &[4, 3]]));
    }

    #[test]
    fn rank_of_singular_and_full() {
        let a = ExactMatrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(a.rank(), 1);
        let b = ExactMatrix::from_int_rows(&[&[0, 5], &[5, 0]]);
        assert_eq!(b.rank(), 2);
        assert_eq!(ExactMatrix::zeros(3, 3).rank(), 0);
    }

    #[test]
    fn inverse_round_trip() {
        let a = ExactMatrix::from_int_rows(&[&[0, 5], &[5, 0]]);
        let inv = a.inverse().unwrap();
        assert_eq!(inv[(0, 1)], frac(1, 5));
        assert_eq!(a.mul(&inv), ExactMatrix::identity(2));
        let s = ExactMatrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert!(s.inverse().is_none());
    }

    #[test]
    fn rref_pivots() {
        let a = ExactMatrix::from_int_rows(&[&[0, 0, 1], &[0, 0, 2], &[1, 2, 0]]);
        let (r, pivots) = a.rref();
        assert_eq!(pivots, vec![0, 2]);
        assert_eq!(r[(0, 0)], rat(1));
        assert_eq!(r[(0, 1)], rat(2));
        assert_eq!(r[(1, 2)], rat(1));
        assert!(r[(2, 0)].is_zero() && r[(2, 1)].is_zero() && r[(2, 2)].is_zero());
    }

    #[test]
    fn symmetric_detection() {
        let a = ExactMatrix::from_int_rows(&[&[0, 1], &[1, 0]]);
        assert!(a.is_symmetric());
        let b = ExactMatrix::from_int_rows(&[&[0, 1], &[2, 0]]);
        assert!(!b.is_symmetric());
    }
}
