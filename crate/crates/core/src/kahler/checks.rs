//! sl₂ relations, Poincaré duality, hard Lefschetz and Hodge–Riemann.

use serde::Serialize;
use serde_json::json;

use super::{KahlerContext, Verdict};
use crate::ratlin::{kernel_basis, rank, rat, signature, RatMatrix, Signature};
use crate::spaces::{CaseTag, DegreeBlockMap, GradedSpace};

/// Primitive piece `P^d = ker(L^{−d+1}) ∩ H^d` with its Lefschetz form.
#[derive(Clone, Debug)]
pub struct PrimitiveData {
    pub degree: i64,
    /// Columns span `P^d`, in coordinates of the basis of `H^d`.
    pub basis: RatMatrix,
    pub lefschetz_gram: RatMatrix,
    pub signature: Signature,
}

impl PrimitiveData {
    pub fn dim(&self) -> usize {
        self.basis.cols()
    }
}

fn compose(
    ctx: &KahlerContext,
    outer: &DegreeBlockMap,
    inner: &DegreeBlockMap,
    degree: i64,
) -> RatMatrix {
    let mid = inner.target.apply(degree);
    outer
        .block_or_zero(&ctx.space, mid)
        .matmul(&inner.block_or_zero(&ctx.space, degree))
        .expect("compatible shapes")
}

/// `[L,F] = h`, `[h,L] = 2L`, `[h,F] = −2F` and `h = d·Id` on every degree.
pub fn verify_sl2(ctx: &KahlerContext) -> Verdict {
    let s = &ctx.space;
    let mut failures = Vec::new();
    let mut checked = Vec::new();
    for &d in s.degrees() {
        if s.dim(d) == 0 {
            continue;
        }
        checked.push(d);
        let h = ctx.h.block_or_zero(s, d);
        let lf = compose(ctx, &ctx.l, &ctx.f, d);
        let fl = compose(ctx, &ctx.f, &ctx.l, d);
        if lf.sub(&fl).expect("same shape") != h {
            failures.push(json!({"relation": "LF - FL = h", "degree": d}));
        }
        let hl = compose(ctx, &ctx.h, &ctx.l, d);
        let lh = compose(ctx, &ctx.l, &ctx.h, d);
        let two_l = ctx.l.block_or_zero(s, d).scale(&rat(2));
        if hl.sub(&lh).expect("same shape") != two_l {
            failures.push(json!({"relation": "hL - Lh = 2L", "degree": d}));
        }
        let hf = compose(ctx, &ctx.h, &ctx.f, d);
        let fh = compose(ctx, &ctx.f, &ctx.h, d);
        let minus_two_f = ctx.f.block_or_zero(s, d).scale(&rat(-2));
        if hf.sub(&fh).expect("same shape") != minus_two_f {
            failures.push(json!({"relation": "hF - Fh = -2F", "degree": d}));
        }
        if h != RatMatrix::scalar(s.dim(d), rat(d)) {
            failures.push(json!({"relation": "h = degree * Id", "degree": d}));
        }
    }
    Verdict::new(
        failures.is_empty(),
        json!({"degrees_checked": checked, "failures": failures}),
    )
}

/// Expected transpose relation between `G_d` and `G_{−d}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GramSymmetry {
    Symmetric,
    Skew,
}

pub fn expected_symmetry(space: &GradedSpace, degree: i64) -> GramSymmetry {
    match space.case {
        CaseTag::ExtUsual if space.n.is_multiple_of(2) && degree.rem_euclid(2) == 1 => {
            GramSymmetry::Skew
        }
        _ => GramSymmetry::Symmetric,
    }
}

/// Every Gram block is nonsingular and has the expected symmetry.
pub fn verify_pd(ctx: &KahlerContext) -> Verdict {
    let s = &ctx.space;
    let mut blocks = Vec::new();
    let mut pass = true;
    for &d in s.degrees() {
        let (rows, cols) = (s.dim(d), s.dim(-d));
        if rows == 0 && cols == 0 {
            continue;
        }
        let g = ctx.gram_block(d);
        let r = rank(&g);
        let sym = expected_symmetry(s, d);
        let transposed = ctx.gram_block(-d).transpose();
        let symmetric_ok = match sym {
            GramSymmetry::Symmetric => transposed == g,
            GramSymmetry::Skew => transposed == g.neg(),
        };
        let ok = rows == cols && r == rows && symmetric_ok;
        pass &= ok;
        blocks.push(json!({
            "degree": d,
            "dim": rows,
            "rank": r,
            "symmetry": sym,
            "symmetry_holds": symmetric_ok,
            "pass": ok,
        }));
    }
    Verdict::new(pass, json!({ "blocks": blocks }))
}

/// `rank(L^i: H^{−i} → H^i) = dim H^{−i} = dim H^i`, and the Lefschetz form
/// on `H^{−i}` is nondegenerate exactly when that holds.
pub fn verify_hl(ctx: &KahlerContext) -> Verdict {
    let s = &ctx.space;
    let mut entries = Vec::new();
    let mut pass = true;
    for d in ctx.lower_degrees() {
        let i = (-d) as usize;
        let r = rank(ctx.power(d, i));
        let form_rank = rank(&ctx.lefschetz_form(d));
        let iso = r == s.dim(d) && r == s.dim(-d);
        let consistent = iso == (form_rank == s.dim(d));
        pass &= iso && consistent;
        entries.push(json!({
            "i": i,
            "dim": s.dim(d),
            "rank": r,
            "lefschetz_form_rank": form_rank,
            "pass": iso && consistent,
        }));
    }
    Verdict::new(pass, json!({ "degrees": entries }))
}

/// `P^d` for `d ≤ 0` with the restricted Lefschetz form and its signature.
pub fn primitive_subspace(ctx: &KahlerContext, degree: i64) -> PrimitiveData {
    assert!(degree <= 0, "primitive pieces live in nonpositive degrees");
    let i = (-degree) as usize;
    let basis = kernel_basis(ctx.power(degree, i + 1));
    let form = ctx.lefschetz_form(degree);
    let lefschetz_gram = basis
        .transpose()
        .matmul(&form)
        .and_then(|m| m.matmul(&basis))
        .expect("compatible shapes");
    let signature = signature(&lefschetz_gram).expect("Lefschetz form is symmetric on primitives");
    PrimitiveData {
        degree,
        basis,
        lefschetz_gram,
        signature,
    }
}

/// Exponent `i` of the sign `(−1)^i` prescribed at `degree`, counted in steps
/// of two from the lowest nonzero degree; `None` on odd offsets, where only
/// definiteness is asked.
pub fn expected_hr_sign(ctx: &KahlerContext, degree: i64) -> Option<usize> {
    let offset = degree - ctx.bottom();
    (offset % 2 == 0).then_some((offset / 2) as usize)
}

/// Lefschetz form on each nonzero primitive piece is `(−1)^i`-definite.
pub fn verify_hr(ctx: &KahlerContext) -> Verdict {
    let mut pieces = Vec::new();
    let mut pass = true;
    for p in ctx.primitives() {
        let d = p.degree;
        if p.dim() == 0 {
            continue;
        }
        let expected = expected_hr_sign(ctx, d);
        let ok = match expected {
            Some(i) => p.signature.is_sign_definite(i),
            None => p.signature.is_positive_definite() || p.signature.is_negative_definite(),
        };
        pass &= ok;
        pieces.push(json!({
            "degree": d,
            "i": expected,
            "primitive_dim": p.dim(),
            "expected_dim": ctx.dim(d) - ctx.dim(d - 2),
            "signature": p.signature,
            "expected": match expected {
                Some(i) if i % 2 == 0 => "positive",
                Some(_) => "negative",
                None => "definite",
            },
            "pass": ok,
        }));
    }
    Verdict::new(pass, json!({ "pieces": pieces }))
}

/// Signatures of the Lefschetz form on the whole of each `H^d`, `d ≤ 0`, for
/// the usual grading of `Λ ⊗ Λ^*`.
pub fn usual_grading_signature_report(n: usize) -> crate::Result<Vec<(i64, Signature)>> {
    let space = GradedSpace::build(CaseTag::ExtUsual, n, n)?;
    let ctx = KahlerContext::new(space);
    Ok(lefschetz_signatures(&ctx))
}

pub(crate) fn lefschetz_signatures(ctx: &KahlerContext) -> Vec<(i64, Signature)> {
    ctx.lower_degrees()
        .into_iter()
        .map(|d| {
            (
                d,
                signature(&ctx.lefschetz_form(d)).expect("Lefschetz form is symmetric"),
            )
        })
        .collect()
}
