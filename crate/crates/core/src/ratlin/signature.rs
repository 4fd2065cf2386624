use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{rat, RatMatrix, Rational};
use crate::error::{Error, Result};

/// Inertia of a real symmetric bilinear form.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Signature {
    pub fn new(positive: usize, negative: usize, zero: usize) -> Self {
        Signature {
            positive,
            negative,
            zero,
        }
    }

    pub fn dim(&self) -> usize {
        self.positive + self.negative + self.zero
    }

    pub fn rank(&self) -> usize {
        self.positive + self.negative
    }

    pub fn is_positive_definite(&self) -> bool {
        self.negative == 0 && self.zero == 0
    }

    pub fn is_negative_definite(&self) -> bool {
        self.positive == 0 && self.zero == 0
    }

    /// `(-1)^k`-definite: positive definite for even `k`, negative for odd.
    pub fn is_sign_definite(&self, k: usize) -> bool {
        if k.is_multiple_of(2) {
            self.is_positive_definite()
        } else {
            self.is_negative_definite()
        }
    }
}

/// Exact inertia by symmetric Gaussian elimination (congruence over ℚ).
///
/// Pivots on the first remaining nonzero diagonal entry. When every
/// remaining diagonal entry vanishes but some off-diagonal entry `a[k][j]`
/// does not (first such pair in row-major order), the basis pair
/// `(e_k, e_j)` is replaced by `(e_k + e_j, e_k − e_j)`, which puts
/// `±2·a[k][j]` on the diagonal. Eigenvalues are never computed.
pub fn signature(m: &RatMatrix) -> Result<Signature> {
    if !m.is_symmetric() {
        return Err(Error::NonSymmetric);
    }
    let n = m.rows();
    let mut a: Vec<Vec<Rational>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut active = vec![true; n];
    let mut remaining = n;
    let mut sig = Signature::default();

    while remaining > 0 {
        let diag = (0..n).find(|&k| active[k] && !a[k][k].is_zero());
        let k = match diag {
            Some(k) => k,
            None => {
                let pair = (0..n).filter(|&k| active[k]).find_map(|k| {
                    ((k + 1)..n)
                        .find(|&j| active[j] && !a[k][j].is_zero())
                        .map(|j| (k, j))
                });
                let Some((k, j)) = pair else {
                    break;
                };
                sum_difference(&mut a, &active, k, j);
                k
            }
        };

        let pivot = a[k][k].clone();
        if pivot.is_positive() {
            sig.positive += 1;
        } else {
            sig.negative += 1;
        }
        active[k] = false;
        remaining -= 1;

        let touched: Vec<usize> = (0..n)
            .filter(|&i| active[i] && !a[i][k].is_zero())
            .collect();
        let factors: Vec<Rational> = touched.iter().map(|&i| &a[i][k] / &pivot).collect();
        for (ti, &i) in touched.iter().enumerate() {
            for &j in &touched[ti..] {
                let delta = &factors[ti] * &a[k][j];
                a[i][j] -= &delta;
                if i != j {
                    a[j][i] = a[i][j].clone();
                }
            }
        }
        for &i in &touched {
            a[i][k] = Rational::zero();
            a[k][i] = Rational::zero();
        }
    }
    sig.zero = n - sig.positive - sig.negative;
    Ok(sig)
}

/// Congruence by `e_k ← e_k + e_j`, `e_j ← e_k − e_j` on the active block.
fn sum_difference(a: &mut [Vec<Rational>], active: &[bool], k: usize, j: usize) {
    let n = a.len();
    for i in 0..n {
        if !active[i] || i == k || i == j {
            continue;
        }
        let (x, y) = (a[i][k].clone(), a[i][j].clone());
        if x.is_zero() && y.is_zero() {
            continue;
        }
        let s = &x + &y;
        let d = &x - &y;
        a[i][k] = s.clone();
        a[k][i] = s;
        a[i][j] = d.clone();
        a[j][i] = d;
    }
    let (akk, ajj, akj) = (a[k][k].clone(), a[j][j].clone(), a[k][j].clone());
    a[k][k] = &akk + &ajj + &akj * rat(2);
    a[j][j] = &akk + &ajj - &akj * rat(2);
    let off = &akk - &ajj;
    a[k][j] = off.clone();
    a[j][k] = off;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratlin::rank;

    #[test]
    fn diagonal_and_hyperbolic() {
        let d = RatMatrix::from_i64(&[&[2, 0], &[0, -3]]);
        assert_eq!(signature(&d).unwrap(), Signature::new(1, 1, 0));
        let h = RatMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(signature(&h).unwrap(), Signature::new(1, 1, 0));
        assert_eq!(
            signature(&RatMatrix::zeros(2, 2)).unwrap(),
            Signature::new(0, 0, 2)
        );
        assert_eq!(
            signature(&RatMatrix::zeros(0, 0)).unwrap(),
            Signature::default()
        );
    }

    #[test]
    fn rejects_asymmetric() {
        let m = RatMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        assert_eq!(signature(&m), Err(Error::NonSymmetric));
    }

    #[test]
    fn zero_diagonal_blocks() {
        // diag(0-block hyperbolic ⊕ hyperbolic) coupled through zeros only.
        let m = RatMatrix::from_i64(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 5], &[0, 0, 5, 0]]);
        assert_eq!(signature(&m).unwrap(), Signature::new(2, 2, 0));
        // Degenerate: [[0,1,1],[1,0,0],[1,0,0]] has rank 2, one hyperbolic pair.
        let m = RatMatrix::from_i64(&[&[0, 1, 1], &[1, 0, 0], &[1, 0, 0]]);
        assert_eq!(rank(&m), 2);
        assert_eq!(signature(&m).unwrap(), Signature::new(1, 1, 1));
    }

    #[test]
    fn definite_examples() {
        // Gram matrix of (1,0),(1,1): positive definite.
        let m = RatMatrix::from_i64(&[&[1, 1], &[1, 2]]);
        assert_eq!(signature(&m).unwrap(), Signature::new(2, 0, 0));
        assert!(signature(&m.neg()).unwrap().is_negative_definite());
        assert!(signature(&m).unwrap().is_sign_definite(0));
        assert!(signature(&m.neg()).unwrap().is_sign_definite(1));
    }
}
