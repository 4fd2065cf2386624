//! The symmetric group permuting variable indices.

use super::operators::assemble;
use super::{BasisVector, DegreeBlockMap, GradedSpace};
use crate::combel::is_permutation;
use crate::error::{Error, Result};

/// Image of a basis vector under `k ↦ g[k]` (0-based), with its sign.
pub fn act_on_basis(v: &BasisVector, g: &[usize]) -> (i64, BasisVector) {
    match v {
        BasisVector::Poly { alpha, beta } => (
            1,
            BasisVector::Poly {
                alpha: alpha.permuted(g),
                beta: beta.permuted(g),
            },
        ),
        BasisVector::Ext { theta, xi } => {
            let (c1, theta) = theta.permuted(g);
            let (c2, xi) = xi.permuted(g);
            (c1 * c2, BasisVector::Ext { theta, xi })
        }
    }
}

/// Block matrices of the permutation `g` (0-based image list of length `n`).
pub fn sn_action(space: &GradedSpace, g: &[usize]) -> Result<DegreeBlockMap> {
    if g.len() != space.n || !is_permutation(g) {
        return Err(Error::InvalidPermutation(g.to_vec()));
    }
    Ok(assemble(space, 0, |v| vec![act_on_basis(v, g)]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combel::{adjacent_transposition, MultiIndex, SubsetMask};
    use crate::ratlin::RatMatrix;
    use crate::spaces::{lowering_f, pairing_gram, raising_l, CaseTag};

    fn grid() -> Vec<GradedSpace> {
        [
            (CaseTag::Poly, 3, 3),
            (CaseTag::Poly, 2, 4),
            (CaseTag::Ext, 3, 3),
            (CaseTag::Ext, 3, 4),
            (CaseTag::ExtUsual, 3, 0),
        ]
        .into_iter()
        .map(|(c, n, m)| GradedSpace::build(c, n, m).unwrap())
        .collect()
    }

    #[test]
    fn identity_acts_trivially() {
        for s in grid() {
            let id: Vec<usize> = (0..s.n).collect();
            let a = sn_action(&s, &id).unwrap();
            for (&d, b) in &a.blocks {
                assert_eq!(b, &RatMatrix::identity(s.dim(d)));
            }
        }
    }

    #[test]
    fn rejects_non_permutations() {
        let s = GradedSpace::build(CaseTag::Poly, 2, 1).unwrap();
        assert!(matches!(
            sn_action(&s, &[0, 0]),
            Err(Error::InvalidPermutation(_))
        ));
        assert!(matches!(
            sn_action(&s, &[0, 1, 2]),
            Err(Error::InvalidPermutation(_))
        ));
    }

    #[test]
    fn named_examples() {
        let v = BasisVector::Poly {
            alpha: MultiIndex(vec![2, 0]),
            beta: MultiIndex(vec![0, 0]),
        };
        let (c, w) = act_on_basis(&v, &[1, 0]);
        assert_eq!(c, 1);
        assert_eq!(
            w,
            BasisVector::Poly {
                alpha: MultiIndex(vec![0, 2]),
                beta: MultiIndex(vec![0, 0])
            }
        );
        let top = BasisVector::Ext {
            theta: SubsetMask::full(2),
            xi: SubsetMask::empty(),
        };
        assert_eq!(act_on_basis(&top, &[1, 0]), (-1, top));
    }

    fn block_product(a: &DegreeBlockMap, b: &DegreeBlockMap, s: &GradedSpace, d: i64) -> RatMatrix {
        let inner = b.block_or_zero(s, d);
        let mid = b.target.apply(d);
        a.block_or_zero(s, mid).matmul(&inner).unwrap()
    }

    #[test]
    fn coxeter_relations() {
        for s in grid() {
            let n = s.n;
            let gens: Vec<DegreeBlockMap> = (0..n - 1)
                .map(|i| sn_action(&s, &adjacent_transposition(n, i)).unwrap())
                .collect();
            for &d in s.degrees() {
                let id = RatMatrix::identity(s.dim(d));
                for i in 0..n - 1 {
                    assert_eq!(block_product(&gens[i], &gens[i], &s, d), id);
                    if i + 1 < n - 1 {
                        let (a, b) = (
                            gens[i].block_or_zero(&s, d),
                            gens[i + 1].block_or_zero(&s, d),
                        );
                        let aba = a.matmul(&b).unwrap().matmul(&a).unwrap();
                        let bab = b.matmul(&a).unwrap().matmul(&b).unwrap();
                        assert_eq!(aba, bab);
                    }
                    for j in i + 2..n - 1 {
                        assert_eq!(
                            block_product(&gens[i], &gens[j], &s, d),
                            block_product(&gens[j], &gens[i], &s, d)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn operators_and_pairing_are_equivariant() {
        for s in grid() {
            let n = s.n;
            let (l, f, g) = (raising_l(&s), lowering_f(&s), pairing_gram(&s));
            for i in 0..n - 1 {
                let a = sn_action(&s, &adjacent_transposition(n, i)).unwrap();
                for &d in s.degrees() {
                    assert_eq!(block_product(&a, &l, &s, d), block_product(&l, &a, &s, d));
                    assert_eq!(block_product(&a, &f, &s, d), block_product(&f, &a, &s, d));
                    // ⟨g a, g b⟩ = ⟨a, b⟩
                    let ad = a.block_or_zero(&s, d);
                    let am = a.block_or_zero(&s, -d);
                    let gd = g.block_or_zero(&s, d);
                    let moved = ad.transpose().matmul(&gd).unwrap().matmul(&am).unwrap();
                    assert_eq!(moved, gd);
                }
            }
        }
    }
}
