use std::collections::BTreeMap;
use std::sync::OnceLock;

use super::checks::{primitive_subspace, PrimitiveData};

use crate::ratlin::RatMatrix;
use crate::spaces::{grading_h, lowering_f, pairing_gram, raising_l, DegreeBlockMap, GradedSpace};

/// A space together with its operators, Gram blocks and the powers of `L`
/// needed by every Kähler check. Built once per verification job.
#[derive(Clone, Debug)]
pub struct KahlerContext {
    pub space: GradedSpace,
    pub l: DegreeBlockMap,
    pub f: DegreeBlockMap,
    pub h: DegreeBlockMap,
    pub gram: DegreeBlockMap,
    /// `powers[d][k]` is `L^k: H^d → H^{d+2k}` for `d ≤ 0` and `0 ≤ k ≤ −d + 1`.
    powers: BTreeMap<i64, Vec<RatMatrix>>,
    primitives: OnceLock<Vec<PrimitiveData>>,
}

impl KahlerContext {
    pub fn new(space: GradedSpace) -> Self {
        let (l, f, h, gram) = (
            raising_l(&space),
            lowering_f(&space),
            grading_h(&space),
            pairing_gram(&space),
        );
        let mut powers = BTreeMap::new();
        for &d in space.degrees() {
            if d > 0 {
                continue;
            }
            let mut list = vec![RatMatrix::identity(space.dim(d))];
            for k in 1..=(-d + 1) {
                let from = d + 2 * (k - 1);
                let step = l.block_or_zero(&space, from);
                let next = step
                    .matmul(&list[(k - 1) as usize])
                    .expect("compatible shapes");
                list.push(next);
            }
            powers.insert(d, list);
        }
        KahlerContext {
            space,
            l,
            f,
            h,
            gram,
            powers,
            primitives: OnceLock::new(),
        }
    }

    /// Primitive pieces of every nonpositive nonzero degree, computed once.
    pub fn primitives(&self) -> &[PrimitiveData] {
        self.primitives.get_or_init(|| {
            self.lower_degrees()
                .into_iter()
                .map(|d| primitive_subspace(self, d))
                .collect()
        })
    }

    pub fn primitive(&self, degree: i64) -> Option<&PrimitiveData> {
        self.primitives().iter().find(|p| p.degree == degree)
    }

    pub fn dim(&self, degree: i64) -> usize {
        self.space.dim(degree)
    }

    /// `L^k` on `H^d` for `d ≤ 0`, `k ≤ −d + 1`.
    pub fn power(&self, degree: i64, k: usize) -> &RatMatrix {
        &self.powers[&degree][k]
    }

    /// Gram block rows `H^d`, columns `H^{−d}`.
    pub fn gram_block(&self, degree: i64) -> RatMatrix {
        self.gram.block_or_zero(&self.space, degree)
    }

    /// Matrix of `(a, b) ↦ ⟨a, L^{−d} b⟩` on `H^d`, `d ≤ 0`.
    pub fn lefschetz_form(&self, degree: i64) -> RatMatrix {
        let k = (-degree) as usize;
        self.gram_block(degree)
            .matmul(self.power(degree, k))
            .expect("compatible shapes")
    }

    /// Lowest degree with a nonzero piece; Hodge–Riemann signs are numbered
    /// from here, so the form is positive definite at the bottom.
    pub fn bottom(&self) -> i64 {
        self.space.lowest_degree().unwrap_or(0)
    }

    /// Nonpositive degrees with a nonzero piece, ascending.
    pub fn lower_degrees(&self) -> Vec<i64> {
        self.space.nonpositive_degrees()
    }
}
