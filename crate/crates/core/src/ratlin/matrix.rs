use std::fmt;

use num_traits::{One, Zero};

use super::{rat, Rational};
use crate::error::{Error, Result};

/// Dense row-major matrix of exact rationals.
///
/// Products skip zero entries on both sides, which keeps the structured,
/// very sparse operator matrices built elsewhere in the crate cheap to
/// compose even though storage is dense.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn scalar(n: usize, value: Rational) -> Self {
        let mut m = Self::zeros(n, n);
        if !value.is_zero() {
            for i in 0..n {
                m.set(i, i, value.clone());
            }
        }
        m
    }

    /// Builds from row vectors; every row must have `cols` entries.
    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Result<Self> {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    op: "from_rows",
                    left: (nrows, cols),
                    right: (1, row.len()),
                });
            }
            entries.extend(row);
        }
        Ok(RatMatrix {
            rows: nrows,
            cols,
            entries,
        })
    }

    /// Convenience constructor for integer literals; panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged matrix literal");
                r.iter().map(|&v| rat(v)).collect()
            })
            .collect();
        Self::from_rows(data, cols).expect("checked above")
    }

    /// Builds a matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(columns: &[Vec<Rational>], rows: usize) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                if !v.is_zero() {
                    m.set(i, j, v.clone());
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn add_at(&mut self, i: usize, j: usize, value: &Rational) {
        let e = &mut self.entries[i * self.cols + j];
        *e += value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn nnz(&self) -> usize {
        self.entries.iter().filter(|e| !e.is_zero()).count()
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i..self.cols).all(|j| *self.get(i, j) == -self.get(j, i)))
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if !v.is_zero() {
                    t.set(j, i, v.clone());
                }
            }
        }
        t
    }

    pub fn matmul(&self, rhs: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                op: "matmul",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let rhs_rows: Vec<Vec<(usize, &Rational)>> = (0..rhs.rows)
            .map(|k| {
                rhs.row(k)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for &(j, b) in &rhs_rows[k] {
                    out.add_at(i, j, &(a * b));
                }
            }
        }
        Ok(out)
    }

    /// `selfᵀ · rhs` without materializing the transpose.
    pub fn tr_matmul(&self, rhs: &RatMatrix) -> Result<RatMatrix> {
        self.transpose().matmul(rhs)
    }

    pub fn add(&self, rhs: &RatMatrix) -> Result<RatMatrix> {
        self.zip_with(rhs, "add", |a, b| a + b)
    }

    pub fn sub(&self, rhs: &RatMatrix) -> Result<RatMatrix> {
        self.zip_with(rhs, "sub", |a, b| a - b)
    }

    fn zip_with(
        &self,
        rhs: &RatMatrix,
        op: &'static str,
        f: impl Fn(&Rational, &Rational) -> Rational,
    ) -> Result<RatMatrix> {
        if self.shape() != rhs.shape() {
            return Err(Error::DimensionMismatch {
                op,
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, factor: &Rational) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    pub fn neg(&self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    /// Horizontal concatenation `[A | B | ...]`; all blocks share the row count.
    pub fn hstack(blocks: &[RatMatrix], rows: usize) -> Result<RatMatrix> {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let mut offset = 0;
        for b in blocks {
            if b.rows != rows {
                return Err(Error::DimensionMismatch {
                    op: "hstack",
                    left: (rows, offset),
                    right: b.shape(),
                });
            }
            for i in 0..b.rows {
                for j in 0..b.cols {
                    let v = b.get(i, j);
                    if !v.is_zero() {
                        out.set(i, offset + j, v.clone());
                    }
                }
            }
            offset += b.cols;
        }
        Ok(out)
    }

    /// Block-diagonal composition `diag(A, B, ...)`.
    pub fn block_diag(blocks: &[RatMatrix]) -> RatMatrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    let v = b.get(i, j);
                    if !v.is_zero() {
                        out.set(r0 + i, c0 + j, v.clone());
                    }
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Sub-matrix on the given row and column index ranges.
    pub fn submatrix(
        &self,
        rows: std::ops::Range<usize>,
        cols: std::ops::Range<usize>,
    ) -> RatMatrix {
        let mut out = Self::zeros(rows.len(), cols.len());
        for (oi, i) in rows.clone().enumerate() {
            for (oj, j) in cols.clone().enumerate() {
                let v = self.get(i, j);
                if !v.is_zero() {
                    out.set(oi, oj, v.clone());
                }
            }
        }
        out
    }

    /// Rows as vectors of `"num/den"` strings.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(super::format_rational).collect())
            .collect()
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|q| q.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratlin::ratio;

    #[test]
    fn identity_is_neutral() {
        let a = RatMatrix::from_i64(&[&[1, 2, 3], &[4, 5, 6]]);
        assert_eq!(RatMatrix::identity(2).matmul(&a).unwrap(), a);
        assert_eq!(a.matmul(&RatMatrix::identity(3)).unwrap(), a);
    }

    #[test]
    fn transpose_is_involution() {
        let mut a = RatMatrix::from_i64(&[&[1, 0], &[7, -2], &[0, 3]]);
        a.set(0, 1, ratio(5, 3));
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(a.transpose().shape(), (2, 3));
    }

    #[test]
    fn matmul_rejects_bad_shapes() {
        let a = RatMatrix::zeros(2, 3);
        let b = RatMatrix::zeros(2, 3);
        assert!(matches!(a.matmul(&b), Err(Error::DimensionMismatch { .. })));
        assert!(a.add(&RatMatrix::zeros(3, 2)).is_err());
    }

    #[test]
    fn small_product_by_hand() {
        let a = RatMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        let b = RatMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(
            a.matmul(&b).unwrap(),
            RatMatrix::from_i64(&[&[2, 1], &[4, 3]])
        );
        assert_eq!(
            a.tr_matmul(&b).unwrap(),
            RatMatrix::from_i64(&[&[3, 1], &[4, 2]])
        );
    }

    #[test]
    fn block_helpers() {
        let a = RatMatrix::from_i64(&[&[1], &[2]]);
        let b = RatMatrix::from_i64(&[&[3, 4], &[5, 6]]);
        let h = RatMatrix::hstack(&[a.clone(), b.clone()], 2).unwrap();
        assert_eq!(h, RatMatrix::from_i64(&[&[1, 3, 4], &[2, 5, 6]]));
        let d = RatMatrix::block_diag(&[a, b]);
        assert_eq!(d.shape(), (4, 3));
        assert_eq!(
            d.submatrix(2..4, 1..3),
            RatMatrix::from_i64(&[&[3, 4], &[5, 6]])
        );
    }
}
