//! Poincaré pairings `H^{d} × H^{−d} → ℚ`.

use num_bigint::BigInt;

use super::operators::ext_parts;
use super::{BasisVector, BlockTarget, CaseTag, DegreeBlockMap, GradedSpace};
use crate::ratlin::{rat, RatMatrix, Rational};

/// Global sign on the exterior pairing of `H′_{n,m}`.
///
/// `(−1)^{m(m−1)/2}` for `m ≤ n`, else `(−1)^{(2n−m)(2n−m−1)/2}`.
pub fn epsilon(n: usize, m: usize) -> i64 {
    let k = if m <= n { m } else { 2 * n - m };
    if (k * k.saturating_sub(1) / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Pairing of two basis vectors of `space` (zero unless their degrees are opposite).
///
/// * `Poly`: `⟨d^α⊗x^β, d^{α′}⊗x^{β′}⟩ = (d^α, x^{β′})(d^{α′}, x^β)` where
///   `(d^α, x^γ) = α!·[α = γ]`.
/// * `Ext`: `ε·(θ_S, ξ_{T′})(θ_{S′}, ξ_T)` with `(θ_S, ξ_T) = [S = T]`.
/// * `ExtUsual`: coefficient of `θ_{[n]} ⊗ ξ_{[n]}` in the product
///   `(θ_S ∧ θ_{S′}) ⊗ (ξ_T ∧ ξ_{T′})`.
pub fn pair_basis(space: &GradedSpace, a: &BasisVector, b: &BasisVector) -> Rational {
    match space.case {
        CaseTag::Poly => {
            let (
                BasisVector::Poly { alpha, beta },
                BasisVector::Poly {
                    alpha: a2,
                    beta: b2,
                },
            ) = (a, b)
            else {
                unreachable!("polynomial space holds polynomial basis vectors")
            };
            if alpha == b2 && a2 == beta {
                Rational::from_integer(
                    BigInt::from(alpha.factorial()) * BigInt::from(beta.factorial()),
                )
            } else {
                rat(0)
            }
        }
        CaseTag::Ext => {
            let ((s, t), (s2, t2)) = (ext_parts(a), ext_parts(b));
            if s == t2 && s2 == t {
                rat(epsilon(space.n, space.m))
            } else {
                rat(0)
            }
        }
        CaseTag::ExtUsual => {
            let ((s, t), (s2, t2)) = (ext_parts(a), ext_parts(b));
            match (s.wedge(s2), t.wedge(t2)) {
                (Some((c1, top1)), Some((c2, top2)))
                    if top1.len() == space.n && top2.len() == space.n =>
                {
                    rat(c1 * c2)
                }
                _ => rat(0),
            }
        }
    }
}

/// Gram blocks: block `d` has rows indexed by the basis of `H^d` and columns
/// by the basis of `H^{−d}`.
pub fn pairing_gram(space: &GradedSpace) -> DegreeBlockMap {
    let mut map = DegreeBlockMap::new(BlockTarget::Negated);
    for &d in space.degrees() {
        let (rows, cols) = (space.basis(d), space.basis(-d));
        if rows.is_empty() || cols.is_empty() {
            continue;
        }
        let mut block = RatMatrix::zeros(rows.len(), cols.len());
        for (j, b) in cols.iter().enumerate() {
            let partner = partner(space, b);
            if let Some((_, i)) = partner.and_then(|p| space.locate(&p)) {
                block.set(i, j, pair_basis(space, &rows[i], b));
            }
        }
        map.blocks.insert(d, block);
    }
    map
}

/// The unique basis vector that can pair nontrivially with `b`.
fn partner(space: &GradedSpace, b: &BasisVector) -> Option<BasisVector> {
    match b {
        BasisVector::Poly { alpha, beta } => Some(BasisVector::Poly {
            alpha: beta.clone(),
            beta: alpha.clone(),
        }),
        BasisVector::Ext { theta, xi } => match space.case {
            CaseTag::Ext => Some(BasisVector::Ext {
                theta: xi.clone(),
                xi: theta.clone(),
            }),
            _ => Some(BasisVector::Ext {
                theta: theta.complement(space.n),
                xi: xi.complement(space.n),
            }),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combel::{MultiIndex, SubsetMask};

    fn poly(a: &[u32], b: &[u32]) -> BasisVector {
        BasisVector::Poly {
            alpha: MultiIndex(a.to_vec()),
            beta: MultiIndex(b.to_vec()),
        }
    }

    #[test]
    fn epsilon_values() {
        assert_eq!(epsilon(3, 2), -1);
        assert_eq!(epsilon(2, 3), 1);
        assert_eq!(epsilon(2, 2), -1);
        assert_eq!(epsilon(4, 0), 1);
        assert_eq!(epsilon(4, 8), 1);
    }

    #[test]
    fn poly_line_pairing() {
        let s = GradedSpace::build(CaseTag::Poly, 1, 2).unwrap();
        assert_eq!(pair_basis(&s, &poly(&[1], &[1]), &poly(&[1], &[1])), rat(1));
        assert_eq!(pair_basis(&s, &poly(&[0], &[2]), &poly(&[2], &[0])), rat(2));
        let g = pairing_gram(&s);
        assert_eq!(g.block(-2).unwrap(), &RatMatrix::from_i64(&[&[2]]));
        assert_eq!(g.block(0).unwrap(), &RatMatrix::from_i64(&[&[1]]));
    }

    /// Brute force over all pairs against the partner shortcut.
    #[test]
    fn gram_matches_all_pairs() {
        for (case, n, m) in [
            (CaseTag::Poly, 2, 3),
            (CaseTag::Ext, 3, 3),
            (CaseTag::Ext, 2, 3),
            (CaseTag::ExtUsual, 3, 0),
        ] {
            let s = GradedSpace::build(case, n, m).unwrap();
            let g = pairing_gram(&s);
            for &d in s.degrees() {
                for (i, a) in s.basis(d).iter().enumerate() {
                    for (j, b) in s.basis(-d).iter().enumerate() {
                        assert_eq!(g.block(d).unwrap().get(i, j), &pair_basis(&s, a, b));
                    }
                }
            }
        }
    }

    /// `⟨La, b⟩ = ⟨a, Lb⟩` holds for the factorial-weighted pairing and
    /// fails for the divided-power one, which drops the `α!β!` weights.
    #[test]
    fn normalizations() {
        let s = GradedSpace::build(CaseTag::Poly, 2, 3).unwrap();
        let l = crate::spaces::raising_l(&s);
        let weighted = pairing_gram(&s);
        let mut divided = weighted.clone();
        for (&d, block) in divided.blocks.iter_mut() {
            for (i, v) in s.basis(d).iter().enumerate() {
                if let BasisVector::Poly { alpha, beta } = v {
                    let w = Rational::from_integer((alpha.factorial() * beta.factorial()).into());
                    for j in 0..block.cols() {
                        let q = block.get(i, j) / &w;
                        block.set(i, j, q);
                    }
                }
            }
        }
        let self_adjoint = |g: &DegreeBlockMap| {
            s.degrees().iter().filter(|&&d| s.dim(d + 2) > 0).all(|&d| {
                let lhs = l.block_or_zero(&s, d).transpose().matmul(&g.block_or_zero(&s, d + 2)).unwrap();
                let rhs = g.block_or_zero(&s, d).matmul(&l.block_or_zero(&s, -d - 2)).unwrap();
                lhs == rhs
            })
        };
        assert!(self_adjoint(&weighted));
        assert!(!self_adjoint(&divided));
    }

    #[test]
    fn symmetry_and_skew() {
        for (case, n, m) in [
            (CaseTag::Poly, 3, 4),
            (CaseTag::Ext, 3, 2),
            (CaseTag::Ext, 4, 5),
        ] {
            let s = GradedSpace::build(case, n, m).unwrap();
            let g = pairing_gram(&s);
            for (&d, block) in &g.blocks {
                assert_eq!(
                    &g.block(-d).unwrap().transpose(),
                    block,
                    "{case} degree {d}"
                );
            }
        }
        for n in [2, 4] {
            let s = GradedSpace::build(CaseTag::ExtUsual, n, 0).unwrap();
            let g = pairing_gram(&s);
            for (&d, block) in &g.blocks {
                let t = g.block(-d).unwrap().transpose();
                if d % 2 == 0 {
                    assert_eq!(&t, block);
                } else {
                    assert_eq!(t, block.neg(), "n={n} degree {d}");
                }
            }
        }
    }

    #[test]
    fn ext_usual_unit_pairs_with_top() {
        let s = GradedSpace::build(CaseTag::ExtUsual, 2, 0).unwrap();
        let unit = BasisVector::Ext {
            theta: SubsetMask::empty(),
            xi: SubsetMask::empty(),
        };
        let top = BasisVector::Ext {
            theta: SubsetMask::full(2),
            xi: SubsetMask::full(2),
        };
        assert_eq!(pair_basis(&s, &unit, &top), rat(1));
    }
}
