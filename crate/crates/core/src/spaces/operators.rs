//! The sl₂ triple `(L, F, h)` on each space.
//!
//! Every operator is assembled from its defining formula on basis vectors:
//! derivations and multiplications for `Poly`, wedges and contractions for
//! the exterior cases. Tensor products of operators act factorwise with no
//! extra sign.

use num_traits::Zero;

use super::{BasisVector, BlockTarget, CaseTag, DegreeBlockMap, GradedSpace};
use crate::combel::{MultiIndex, SubsetMask};
use crate::ratlin::{rat, RatMatrix};

type Terms = Vec<(i64, BasisVector)>;

/// Matrix of the linear map determined by `image` on basis vectors.
pub(super) fn assemble(
    space: &GradedSpace,
    shift: i64,
    image: impl Fn(&BasisVector) -> Terms,
) -> DegreeBlockMap {
    let mut map = DegreeBlockMap::new(BlockTarget::Shift(shift));
    for &d in space.degrees() {
        let (src, dst) = (space.dim(d), space.dim(d + shift));
        if src == 0 || dst == 0 {
            continue;
        }
        let mut block = RatMatrix::zeros(dst, src);
        for (j, v) in space.basis(d).iter().enumerate() {
            for (c, w) in image(v) {
                if c == 0 {
                    continue;
                }
                let (dw, i) = space.locate(&w).expect("image lies in the space");
                debug_assert_eq!(dw, d + shift, "operator has the wrong degree");
                block.add_at(i, j, &rat(c));
            }
        }
        map.blocks.insert(d, block);
    }
    map
}

/// `L`: degree +2.
pub fn raising_l(space: &GradedSpace) -> DegreeBlockMap {
    let n = space.n;
    match space.case {
        CaseTag::Poly => assemble(space, 2, |v| {
            let (alpha, beta) = poly_parts(v);
            // d_k ⊗ ∂/∂x_k
            (0..n)
                .filter_map(|k| {
                    let lowered = beta.with_decrement(k)?;
                    Some((beta.0[k] as i64, poly(alpha.with_increment(k), lowered)))
                })
                .collect()
        }),
        CaseTag::Ext => assemble(space, 2, |v| {
            let (s, t) = ext_parts(v);
            // e_{θ_k} ⊗ i_{θ_k}
            (0..n)
                .filter_map(|k| tensor(s.wedge_left(k), t.contract(k)))
                .collect()
        }),
        CaseTag::ExtUsual => assemble(space, 2, |v| {
            let (s, t) = ext_parts(v);
            // e_{θ_k} ⊗ e_{ξ_k}
            (0..n)
                .filter_map(|k| tensor(s.wedge_left(k), t.wedge_left(k)))
                .collect()
        }),
    }
}

/// `F`: degree −2.
pub fn lowering_f(space: &GradedSpace) -> DegreeBlockMap {
    let n = space.n;
    match space.case {
        CaseTag::Poly => assemble(space, -2, |v| {
            let (alpha, beta) = poly_parts(v);
            // ∂/∂d_k ⊗ x_k
            (0..n)
                .filter_map(|k| {
                    let lowered = alpha.with_decrement(k)?;
                    Some((alpha.0[k] as i64, poly(lowered, beta.with_increment(k))))
                })
                .collect()
        }),
        CaseTag::Ext => assemble(space, -2, |v| {
            let (s, t) = ext_parts(v);
            // i_{ξ_k} ⊗ e_{ξ_k}
            (0..n)
                .filter_map(|k| tensor(s.contract(k), t.wedge_left(k)))
                .collect()
        }),
        CaseTag::ExtUsual => assemble(space, -2, |v| {
            let (s, t) = ext_parts(v);
            // i_{ξ_k} ⊗ i_{θ_k}
            (0..n)
                .filter_map(|k| tensor(s.contract(k), t.contract(k)))
                .collect()
        }),
    }
}

/// `h`: degree 0, built from number operators rather than from the grading.
pub fn grading_h(space: &GradedSpace) -> DegreeBlockMap {
    let n = space.n;
    match space.case {
        CaseTag::Poly => assemble(space, 0, |v| {
            let (alpha, beta) = poly_parts(v);
            // Σ d_k ∂/∂d_k ⊗ id − id ⊗ x_k ∂/∂x_k
            let c: i64 = (0..n).map(|k| alpha.0[k] as i64 - beta.0[k] as i64).sum();
            vec![(c, v.clone())]
        }),
        CaseTag::Ext => assemble(space, 0, |v| {
            let (s, t) = ext_parts(v);
            // Σ e_{θ_k} i_{ξ_k} ⊗ id − id ⊗ e_{ξ_k} i_{θ_k}
            let mut terms = Terms::new();
            for k in 0..n {
                if let Some(x) = tensor(number_term(s, k), Some((1, t.clone()))) {
                    terms.push(x);
                }
                if let Some((c, w)) = tensor(Some((1, s.clone())), number_term(t, k)) {
                    terms.push((-c, w));
                }
            }
            collect_like(terms)
        }),
        CaseTag::ExtUsual => assemble(space, 0, |v| {
            let (s, t) = ext_parts(v);
            // Σ e_{θ_k} i_{ξ_k} ⊗ id + id ⊗ e_{ξ_k} i_{θ_k} − n·id
            let mut terms = vec![(-(n as i64), v.clone())];
            for k in 0..n {
                terms.extend(tensor(number_term(s, k), Some((1, t.clone()))));
                terms.extend(tensor(Some((1, s.clone())), number_term(t, k)));
            }
            collect_like(terms)
        }),
    }
}

/// `e_k ∘ i_k` on a single wedge monomial.
fn number_term(s: &SubsetMask, k: usize) -> Option<(i64, SubsetMask)> {
    let (c1, w1) = s.contract(k)?;
    let (c2, w2) = w1.wedge_left(k)?;
    Some((c1 * c2, w2))
}

fn tensor(
    a: Option<(i64, SubsetMask)>,
    b: Option<(i64, SubsetMask)>,
) -> Option<(i64, BasisVector)> {
    let ((ca, theta), (cb, xi)) = (a?, b?);
    Some((ca * cb, BasisVector::Ext { theta, xi }))
}

fn collect_like(terms: Terms) -> Terms {
    let mut out: Terms = Vec::new();
    for (c, v) in terms {
        match out.iter_mut().find(|(_, w)| *w == v) {
            Some(slot) => slot.0 += c,
            None => out.push((c, v)),
        }
    }
    out.retain(|(c, _)| !c.is_zero());
    out
}

fn poly(alpha: MultiIndex, beta: MultiIndex) -> BasisVector {
    BasisVector::Poly { alpha, beta }
}

fn poly_parts(v: &BasisVector) -> (&MultiIndex, &MultiIndex) {
    match v {
        BasisVector::Poly { alpha, beta } => (alpha, beta),
        BasisVector::Ext { .. } => unreachable!("polynomial space holds polynomial basis vectors"),
    }
}

pub(super) fn ext_parts(v: &BasisVector) -> (&SubsetMask, &SubsetMask) {
    match v {
        BasisVector::Ext { theta, xi } => (theta, xi),
        BasisVector::Poly { .. } => unreachable!("exterior space holds wedge basis vectors"),
    }
}
