//! Fraction-free row reduction.
//!
//! Rows are cleared of denominators, stored sparsely over ℤ and kept
//! primitive (content 1, positive leading entry) after every combination.
//! Only rows that actually meet a pivot column are touched, so fill-in and
//! coefficient growth stay inside the connected blocks of the matrix.

use std::collections::BTreeMap;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{RatMatrix, Rational};

/// Sparse integer row: sorted `(column, value)` pairs, no zeros stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntRow {
    entries: Vec<(usize, BigInt)>,
}

impl IntRow {
    /// Scales a rational row by the lcm of its denominators.
    pub(crate) fn from_rationals(values: &[Rational]) -> IntRow {
        let mut lcm = BigInt::one();
        for v in values.iter().filter(|v| !v.is_zero()) {
            lcm = lcm.lcm(v.denom());
        }
        let entries = values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(j, v)| (j, v.numer() * (&lcm / v.denom())))
            .collect();
        let mut row = IntRow { entries };
        row.make_primitive();
        row
    }

    pub(crate) fn from_sparse(mut entries: Vec<(usize, BigInt)>) -> IntRow {
        entries.retain(|(_, v)| !v.is_zero());
        entries.sort_by_key(|(j, _)| *j);
        let mut row = IntRow { entries };
        row.make_primitive();
        row
    }

    fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn lead(&self) -> Option<(usize, &BigInt)> {
        self.entries.first().map(|(j, v)| (*j, v))
    }

    fn get(&self, col: usize) -> Option<&BigInt> {
        self.entries
            .binary_search_by_key(&col, |(j, _)| *j)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    /// Divides out the content and makes the leading entry positive.
    fn make_primitive(&mut self) {
        let mut g = BigInt::zero();
        for (_, v) in &self.entries {
            g = g.gcd(v);
            if g.is_one() {
                break;
            }
        }
        let negate = self
            .entries
            .first()
            .is_some_and(|(_, v)| v.sign() == Sign::Minus);
        if g.is_zero() {
            return;
        }
        if negate {
            g = -g;
        }
        if !g.is_one() {
            for (_, v) in &mut self.entries {
                *v /= &g;
            }
        }
    }

    /// `a·self − b·other`, then made primitive.
    fn combine(&self, a: &BigInt, other: &IntRow, b: &BigInt) -> IntRow {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut k) = (0, 0);
        while i < self.entries.len() || k < other.entries.len() {
            let ci = self.entries.get(i).map_or(usize::MAX, |e| e.0);
            let ck = other.entries.get(k).map_or(usize::MAX, |e| e.0);
            let (col, v) = if ci < ck {
                i += 1;
                (ci, a * &self.entries[i - 1].1)
            } else if ck < ci {
                k += 1;
                (ck, -(b * &other.entries[k - 1].1))
            } else {
                i += 1;
                k += 1;
                (ci, a * &self.entries[i - 1].1 - b * &other.entries[k - 1].1)
            };
            if !v.is_zero() {
                out.push((col, v));
            }
        }
        let mut row = IntRow { entries: out };
        row.make_primitive();
        row
    }

    /// Eliminates column `col` of `self` using `pivot`, whose leading entry sits at `col`.
    fn eliminate(&self, col: usize, pivot: &IntRow) -> IntRow {
        let Some(v) = self.get(col) else {
            return self.clone();
        };
        let p = pivot
            .get(col)
            .expect("pivot row has an entry at its pivot column");
        let g = v.gcd(p);
        self.combine(&(p / &g), pivot, &(v / &g))
    }
}

/// Incrementally built row echelon form over ℤ.
///
/// Rows are inserted in order; each is reduced against the existing pivot
/// rows at its leading column until it either vanishes or opens a new pivot.
/// [`RowEchelon::into_rref`] then back-substitutes to the unique reduced form.
#[derive(Clone, Debug, Default)]
pub struct RowEchelon {
    cols: usize,
    pivots: BTreeMap<usize, IntRow>,
}

impl RowEchelon {
    pub fn new(cols: usize) -> Self {
        RowEchelon {
            cols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Inserts a rational row; returns true if it increased the rank.
    pub fn insert(&mut self, row: &[Rational]) -> bool {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        self.insert_int(IntRow::from_rationals(row))
    }

    /// Inserts an integer row given sparsely; repeated columns are summed.
    pub fn insert_sparse(&mut self, entries: &[(usize, i64)]) -> bool {
        let mut merged: BTreeMap<usize, BigInt> = BTreeMap::new();
        for &(j, v) in entries {
            assert!(j < self.cols, "column out of range");
            *merged.entry(j).or_insert_with(BigInt::zero) += v;
        }
        self.insert_int(IntRow::from_sparse(merged.into_iter().collect()))
    }

    pub(crate) fn insert_int(&mut self, mut row: IntRow) -> bool {
        loop {
            let Some((col, _)) = row.lead() else {
                return false;
            };
            match self.pivots.get(&col) {
                Some(pivot) => {
                    row = row.eliminate(col, pivot);
                    if row.is_empty() {
                        return false;
                    }
                }
                None => {
                    self.pivots.insert(col, row);
                    return true;
                }
            }
        }
    }

    /// Reduced row echelon form: pivot rows sorted by pivot column, each
    /// with pivot 1 and zeros in every other pivot column.
    pub fn into_rref(self) -> Rref {
        let cols = self.cols;
        let pivot_cols: Vec<usize> = self.pivots.keys().copied().collect();
        let mut rows: Vec<IntRow> = self.pivots.into_values().collect();
        for k in (0..rows.len()).rev() {
            let col = pivot_cols[k];
            let (before, rest) = rows.split_at_mut(k);
            let pivot = &rest[0];
            for r in before.iter_mut() {
                if r.get(col).is_some() {
                    *r = r.eliminate(col, pivot);
                }
            }
        }
        let rows = rows
            .into_iter()
            .zip(&pivot_cols)
            .map(|(r, &col)| {
                let p = r.get(col).expect("pivot present").clone();
                r.entries
                    .into_iter()
                    .map(|(j, v)| (j, Rational::new(v, p.clone())))
                    .collect()
            })
            .collect();
        Rref {
            cols,
            pivot_cols,
            rows,
        }
    }
}

/// Reduced row echelon form with sparse rational rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub cols: usize,
    pub pivot_cols: Vec<usize>,
    /// One sparse row per pivot, aligned with `pivot_cols`.
    pub rows: Vec<Vec<(usize, Rational)>>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivot_cols.len()
    }

    pub fn dense_row(&self, k: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.cols];
        for (j, q) in &self.rows[k] {
            v[*j] = q.clone();
        }
        v
    }

    pub fn to_matrix(&self) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.rank(), self.cols);
        for (i, row) in self.rows.iter().enumerate() {
            for (j, q) in row {
                m.set(i, *j, q.clone());
            }
        }
        m
    }
}

fn echelon_of(m: &RatMatrix) -> RowEchelon {
    let mut ech = RowEchelon::new(m.cols());
    for i in 0..m.rows() {
        ech.insert(m.row(i));
    }
    ech
}

pub fn rank(m: &RatMatrix) -> usize {
    echelon_of(m).rank()
}

pub fn rref(m: &RatMatrix) -> Rref {
    echelon_of(m).into_rref()
}

/// Null-space basis as the columns of a `cols × (cols − rank)` matrix.
///
/// One column per free variable, in increasing order of the free column;
/// that column carries a 1, the other free columns 0, and the pivot
/// coordinates are read off the reduced echelon form. The result depends
/// only on the input matrix.
pub fn kernel_basis(m: &RatMatrix) -> RatMatrix {
    let r = rref(m);
    let n = m.cols();
    let mut is_pivot = vec![false; n];
    for &c in &r.pivot_cols {
        is_pivot[c] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&j| !is_pivot[j]).collect();
    let mut basis = RatMatrix::zeros(n, free.len());
    let free_pos: BTreeMap<usize, usize> = free.iter().enumerate().map(|(k, &j)| (j, k)).collect();
    for (k, &f) in free.iter().enumerate() {
        basis.set(f, k, Rational::one());
    }
    for (row, &pc) in r.rows.iter().zip(&r.pivot_cols) {
        for (j, q) in row {
            if let Some(&k) = free_pos.get(j) {
                basis.set(pc, k, -q);
            }
        }
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratlin::{is_canonical, rat, ratio};

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&RatMatrix::identity(2)), 2);
        assert_eq!(rank(&RatMatrix::zeros(3, 4)), 0);
        assert_eq!(rank(&RatMatrix::from_i64(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&RatMatrix::zeros(0, 5)), 0);
    }

    #[test]
    fn kernel_examples() {
        let k = kernel_basis(&RatMatrix::identity(3));
        assert_eq!(k.shape(), (3, 0));

        let k = kernel_basis(&RatMatrix::zeros(2, 2));
        assert_eq!(k, RatMatrix::identity(2));

        let k = kernel_basis(&RatMatrix::from_i64(&[&[1, 1]]));
        assert_eq!(k, RatMatrix::from_i64(&[&[-1], &[1]]));
    }

    #[test]
    fn rref_handles_fractions() {
        let mut m = RatMatrix::from_i64(&[&[2, 4, 1], &[1, 3, 0]]);
        m.set(1, 2, ratio(1, 3));
        let r = rref(&m);
        assert_eq!(r.pivot_cols, vec![0, 1]);
        // By hand: R1 = (1, 2, 1/2), R2 - R1 = (0, 1, -1/6), R1 - 2(R2 - R1) = (1, 0, 5/6).
        let dense = r.to_matrix();
        assert_eq!(dense.get(0, 0), &rat(1));
        assert_eq!(dense.get(1, 1), &rat(1));
        assert_eq!(dense.get(0, 1), &rat(0));
        assert_eq!(dense.get(0, 2), &ratio(5, 6));
        assert_eq!(dense.get(1, 2), &ratio(-1, 6));
        assert!(dense.entries().iter().all(is_canonical));
    }

    #[test]
    fn kernel_is_annihilated() {
        let m = RatMatrix::from_i64(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, -1, 0]]);
        let k = kernel_basis(&m);
        assert_eq!(k.cols(), 4 - rank(&m));
        assert!(m.matmul(&k).unwrap().is_zero());
    }

    #[test]
    fn insert_reports_rank_growth() {
        let mut e = RowEchelon::new(3);
        assert!(e.insert(&[rat(0), rat(2), rat(4)]));
        assert!(!e.insert(&[rat(0), rat(1), rat(2)]));
        assert!(e.insert(&[rat(1), rat(0), rat(0)]));
        assert!(!e.insert(&[rat(0), rat(0), rat(0)]));
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn sparse_insert_merges_columns() {
        let mut e = RowEchelon::new(3);
        assert!(!e.insert_sparse(&[(1, 2), (1, -2)]));
        assert!(e.insert_sparse(&[(2, 3), (0, 6), (2, 3)]));
        assert!(!e.insert(&[rat(1), rat(0), rat(1)]));
        let r = e.into_rref();
        assert_eq!(r.dense_row(0), vec![rat(1), rat(0), rat(1)]);
    }
}
