//! Single-factor operators on the full exterior algebra `Λ(V)`, `dim V = n`.
//!
//! Used to check the wedge/contraction identities the tensor-product
//! operators are built from. Basis: all wedge monomials `v_S`, ordered by
//! size then lexicographically.

use std::collections::HashMap;

use num_traits::Zero;

use crate::combel::{subsets, SubsetMask};
use crate::ratlin::{rat, RatMatrix, Rational};

#[derive(Clone, Debug)]
pub struct ExteriorAlgebra {
    pub n: usize,
    basis: Vec<SubsetMask>,
    index: HashMap<SubsetMask, usize>,
}

impl ExteriorAlgebra {
    pub fn new(n: usize) -> Self {
        let basis: Vec<SubsetMask> = (0..=n).flat_map(|k| subsets(n, k)).collect();
        let index = basis
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        ExteriorAlgebra { n, basis, index }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SubsetMask] {
        &self.basis
    }

    fn linear_combination(
        &self,
        coeffs: &[Rational],
        op: impl Fn(&SubsetMask, usize) -> Option<(i64, SubsetMask)>,
    ) -> RatMatrix {
        assert_eq!(coeffs.len(), self.n, "vector has the wrong length");
        let mut m = RatMatrix::zeros(self.dim(), self.dim());
        for (j, s) in self.basis.iter().enumerate() {
            for (k, c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if let Some((sign, t)) = op(s, k) {
                    m.add_at(self.index[&t], j, &(c * rat(sign)));
                }
            }
        }
        m
    }

    /// Left multiplication `e_v` by `v = Σ v_k e_k`.
    pub fn wedge(&self, v: &[Rational]) -> RatMatrix {
        self.linear_combination(v, SubsetMask::wedge_left)
    }

    /// Interior product `i_α` for `α = Σ α_k e_k^*`.
    pub fn interior(&self, alpha: &[Rational]) -> RatMatrix {
        self.linear_combination(alpha, SubsetMask::contract)
    }

    /// Gram matrix of `(u, v^*) = det(v_k^*(u_l))` between the monomial bases
    /// of `Λ(V)` (rows) and `Λ(V^*)` (columns), by the Leibniz expansion.
    pub fn duality_gram(&self) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.dim(), self.dim());
        for (i, u) in self.basis.iter().enumerate() {
            for (j, w) in self.basis.iter().enumerate() {
                if u.len() == w.len() {
                    m.set(i, j, rat(leibniz_det(u.elements(), w.elements())));
                }
            }
        }
        m
    }
}

/// `det(δ(w_k, u_l))` over all permutations.
fn leibniz_det(u: &[usize], w: &[usize]) -> i64 {
    let k = u.len();
    let mut total = 0;
    let mut perm: Vec<usize> = (0..k).collect();
    loop {
        if (0..k).all(|a| w[a] == u[perm[a]]) {
            let inversions = (0..k)
                .flat_map(|a| (a + 1..k).map(move |b| (a, b)))
                .filter(|&(a, b)| perm[a] > perm[b])
                .count();
            total += if inversions % 2 == 0 { 1 } else { -1 };
        }
        if !next_permutation(&mut perm) {
            return total;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len())
        .rev()
        .find(|&j| p[j] > p[i - 1])
        .expect("successor exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
