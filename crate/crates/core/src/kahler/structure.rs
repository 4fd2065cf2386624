//! Isometry of `L` for the Lefschetz forms, orthogonality of the primitive
//! decomposition, and equivariance under the symmetric group.

use serde_json::json;

use super::{KahlerContext, Verdict};
use crate::combel::adjacent_transposition;
use crate::ratlin::{rank, RatMatrix};
use crate::spaces::sn_action;

/// `(La, Lb)` on `H^{d+2}` equals `(a, b)` on `H^d` for `d ≤ −2`, and
/// `H^d = ⊕_j L^j P^{d−2j}` with the summands mutually orthogonal for the
/// Lefschetz form on `H^d`.
pub fn verify_isometry_and_orthogonality(ctx: &KahlerContext) -> Verdict {
    let s = &ctx.space;
    let mut isometry = Vec::new();
    let mut decomposition = Vec::new();
    let mut pass = true;

    for d in ctx.lower_degrees() {
        let form = ctx.lefschetz_form(d);
        if d <= -2 {
            let l = ctx.l.block_or_zero(s, d);
            let upper = ctx.lefschetz_form(d + 2);
            let pulled = l
                .transpose()
                .matmul(&upper)
                .and_then(|m| m.matmul(&l))
                .expect("compatible shapes");
            let ok = pulled == form;
            pass &= ok;
            isometry.push(json!({"degree": d, "pass": ok}));
        }

        let mut pieces = Vec::new();
        let mut dims = Vec::new();
        let mut j = 0usize;
        loop {
            let src = d - 2 * j as i64;
            if src < ctx.bottom() {
                break;
            }
            if let Some(p) = ctx.primitive(src) {
                if p.dim() > 0 {
                    pieces.push(
                        ctx.power(src, j)
                            .matmul(&p.basis)
                            .expect("compatible shapes"),
                    );
                    dims.push(p.dim());
                }
            }
            j += 1;
        }
        let change = RatMatrix::hstack(&pieces, s.dim(d)).expect("pieces live in one degree");
        let spans = change.cols() == s.dim(d) && rank(&change) == s.dim(d);
        let adapted = change
            .transpose()
            .matmul(&form)
            .and_then(|m| m.matmul(&change))
            .expect("compatible shapes");
        let orthogonal = off_diagonal_blocks_vanish(&adapted, &dims);
        pass &= spans && orthogonal;
        decomposition.push(json!({
            "degree": d,
            "piece_dims": dims,
            "spans": spans,
            "orthogonal": orthogonal,
        }));
    }
    Verdict::new(
        pass,
        json!({"isometry": isometry, "decomposition": decomposition}),
    )
}

fn off_diagonal_blocks_vanish(m: &RatMatrix, dims: &[usize]) -> bool {
    let mut owner = Vec::with_capacity(m.rows());
    for (k, &d) in dims.iter().enumerate() {
        owner.extend(std::iter::repeat_n(k, d));
    }
    (0..m.rows()).all(|i| {
        (0..m.cols()).all(|j| owner[i] == owner[j] || num_traits::Zero::is_zero(m.get(i, j)))
    })
}

/// Every adjacent transposition commutes with `L`, `F`, `h` and preserves the
/// pairing and every Lefschetz form.
pub fn verify_equivariance(ctx: &KahlerContext) -> Verdict {
    let s = &ctx.space;
    let n = s.n;
    let mut failures = Vec::new();
    let forms: Vec<(i64, RatMatrix)> = ctx
        .lower_degrees()
        .into_iter()
        .map(|d| (d, ctx.lefschetz_form(d)))
        .collect();
    for i in 0..n.saturating_sub(1) {
        let g = sn_action(s, &adjacent_transposition(n, i)).expect("valid generator");
        for &d in s.degrees() {
            if s.dim(d) == 0 {
                continue;
            }
            let a = g.block_or_zero(s, d);
            for (name, op) in [("L", &ctx.l), ("F", &ctx.f), ("h", &ctx.h)] {
                let t = op.target.apply(d);
                let lhs = g
                    .block_or_zero(s, t)
                    .matmul(&op.block_or_zero(s, d))
                    .expect("shapes");
                let rhs = op.block_or_zero(s, d).matmul(&a).expect("shapes");
                if lhs != rhs {
                    failures.push(json!({"generator": i + 1, "object": name, "degree": d}));
                }
            }
            let gd = ctx.gram_block(d);
            let moved = a
                .transpose()
                .matmul(&gd)
                .and_then(|m| m.matmul(&g.block_or_zero(s, -d)))
                .expect("shapes");
            if moved != gd {
                failures.push(json!({"generator": i + 1, "object": "pairing", "degree": d}));
            }
        }
        for (d, form) in &forms {
            let a = g.block_or_zero(s, *d);
            let moved = a
                .transpose()
                .matmul(form)
                .and_then(|m| m.matmul(&a))
                .expect("shapes");
            if &moved != form {
                failures.push(json!({"generator": i + 1, "object": "lefschetz-form", "degree": d}));
            }
        }
    }
    Verdict::new(
        failures.is_empty(),
        json!({"generators": n.saturating_sub(1), "failures": failures}),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::{CaseTag, GradedSpace};

    fn ctx(case: CaseTag, n: usize, m: usize) -> KahlerContext {
        KahlerContext::new(GradedSpace::build(case, n, m).unwrap())
    }

    #[test]
    fn isometry_examples() {
        assert!(verify_isometry_and_orthogonality(&ctx(CaseTag::Poly, 2, 2)).pass);
        assert!(verify_isometry_and_orthogonality(&ctx(CaseTag::Ext, 3, 3)).pass);
        for case in [CaseTag::Poly, CaseTag::Ext] {
            let v = verify_isometry_and_orthogonality(&ctx(case, 2, 0));
            assert!(v.pass);
            assert_eq!(v.details["isometry"].as_array().unwrap().len(), 0);
        }
    }

    #[test]
    fn equivariance_examples() {
        assert!(verify_equivariance(&ctx(CaseTag::Poly, 3, 2)).pass);
        assert!(verify_equivariance(&ctx(CaseTag::Ext, 3, 2)).pass);
        let v = verify_equivariance(&ctx(CaseTag::Poly, 1, 3));
        assert!(v.pass);
        assert_eq!(v.details["generators"], 0);
    }

    #[test]
    fn block_detection() {
        let m = RatMatrix::from_i64(&[&[1, 0, 0], &[0, 2, 3], &[0, 3, 4]]);
        assert!(off_diagonal_blocks_vanish(&m, &[1, 2]));
        assert!(!off_diagonal_blocks_vanish(&m, &[2, 1]));
    }
}
