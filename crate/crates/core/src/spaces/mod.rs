//! The three graded spaces, with explicit bases and operator matrices.
//!
//! * [`CaseTag::Poly`]: `H_{n,m} = ⊕_i D^i ⊗ R^{m−i}` with `D = ℚ[d_1..d_n]`,
//!   `R = ℚ[x_1..x_n]`; the piece `D^i ⊗ R^{m−i}` sits in degree `−m + 2i`.
//! * [`CaseTag::Ext`]: `⊕_i Λ^i ⊗ (Λ*)^{m−i}` for `m ≤ 2n`, same balanced
//!   grading, `Λ = Λ[θ_1..θ_n]` and `Λ* = Λ[ξ_1..ξ_n]` in dual bases.
//! * [`CaseTag::ExtUsual`]: all of `Λ ⊗ Λ*` with `Λ^j ⊗ (Λ*)^k` in degree
//!   `−n + j + k`, so `1 ⊗ 1` lives in degree `−n`.
//!
//! Bases are unnormalized monomials `d^α ⊗ x^β` and wedge monomials
//! `θ_S ⊗ ξ_T` (ascending indices), ordered lexicographically within each
//! degree. Operators, pairings and the group action are assembled into
//! [`DegreeBlockMap`]s, one exact matrix per source degree.

mod action;
mod dump;
pub mod exterior;
mod operators;
mod pairing;

pub use action::{act_on_basis, sn_action};
pub use dump::{dump_json, SpaceDump, DUMP_SCHEMA_VERSION};
pub use operators::{grading_h, lowering_f, raising_l};
pub use pairing::{epsilon, pair_basis, pairing_gram};

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combel::{binomial, compositions, subsets, MultiIndex, SubsetMask};
use crate::error::{Error, Result};
use crate::ratlin::RatMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseTag {
    Poly,
    Ext,
    ExtUsual,
}

impl CaseTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::Poly => "poly",
            CaseTag::Ext => "ext",
            CaseTag::ExtUsual => "ext-usual",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CaseTag {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "poly" => Ok(CaseTag::Poly),
            "ext" => Ok(CaseTag::Ext),
            "ext-usual" | "ext_usual" | "extusual" => Ok(CaseTag::ExtUsual),
            other => Err(format!(
                "unknown case {other:?} (expected poly, ext or ext-usual)"
            )),
        }
    }
}

/// A basis monomial: `d^α ⊗ x^β`, or `θ_S ⊗ ξ_T` for both exterior cases.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisVector {
    Poly { alpha: MultiIndex, beta: MultiIndex },
    Ext { theta: SubsetMask, xi: SubsetMask },
}

impl fmt::Display for BasisVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisVector::Poly { alpha, beta } => write!(f, "d^{alpha} ⊗ x^{beta}"),
            BasisVector::Ext { theta, xi } => write!(f, "θ{theta} ⊗ ξ{xi}"),
        }
    }
}

/// Upper bounds on the dimensions a build may allocate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimCap {
    pub total: u128,
    pub per_degree: u128,
}

impl Default for DimCap {
    fn default() -> Self {
        DimCap {
            total: 200_000,
            per_degree: 5_000,
        }
    }
}

/// Graded space with an ordered basis per degree.
#[derive(Clone, Debug)]
pub struct GradedSpace {
    pub case: CaseTag,
    pub n: usize,
    /// Top degree of the balanced cases; equals `n` for `ExtUsual`.
    pub m: usize,
    degrees: Vec<i64>,
    bases: BTreeMap<i64, Vec<BasisVector>>,
    index: HashMap<BasisVector, (i64, usize)>,
}

/// Dimension of each nominal degree, from the closed formulas, without building.
pub fn expected_dims(case: CaseTag, n: usize, m: usize) -> BTreeMap<i64, u128> {
    let (n64, m64) = (n as u64, m as u64);
    let mut dims = BTreeMap::new();
    match case {
        CaseTag::Poly => {
            for i in 0..=m64 {
                let d = binomial(n64 + i - 1, i) * binomial(n64 + m64 - i - 1, m64 - i);
                dims.insert(-(m as i64) + 2 * i as i64, d);
            }
        }
        CaseTag::Ext => {
            for i in 0..=m64 {
                let d = binomial(n64, i)
                    * if m64 - i <= n64 {
                        binomial(n64, m64 - i)
                    } else {
                        0
                    };
                dims.insert(-(m as i64) + 2 * i as i64, d);
            }
        }
        CaseTag::ExtUsual => {
            for i in 0..=2 * n64 {
                let d: u128 = (0..=i)
                    .map(|j| binomial(n64, j) * binomial(n64, i - j))
                    .sum();
                dims.insert(-(n as i64) + i as i64, d);
            }
        }
    }
    dims
}

impl GradedSpace {
    pub fn build(case: CaseTag, n: usize, m: usize) -> Result<Self> {
        Self::build_with_cap(case, n, m, DimCap::default())
    }

    pub fn build_with_cap(case: CaseTag, n: usize, m: usize, cap: DimCap) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange("n must be at least 1".into()));
        }
        if case == CaseTag::Ext && m > 2 * n {
            return Err(Error::OutOfRange(format!(
                "ext space needs m <= 2n, got n={n}, m={m}"
            )));
        }
        let m = if case == CaseTag::ExtUsual { n } else { m };
        let dims = expected_dims(case, n, m);
        let total: u128 = dims.values().sum();
        if total > cap.total {
            return Err(Error::DimensionCap {
                what: "total dimension".into(),
                value: total,
                cap: cap.total,
            });
        }
        if let Some((d, &v)) = dims.iter().find(|(_, &v)| v > cap.per_degree) {
            return Err(Error::DimensionCap {
                what: format!("dimension of degree {d}"),
                value: v,
                cap: cap.per_degree,
            });
        }

        let mut bases: BTreeMap<i64, Vec<BasisVector>> =
            dims.keys().map(|&d| (d, Vec::new())).collect();
        match case {
            CaseTag::Poly => {
                for i in 0..=m {
                    let basis = bases
                        .get_mut(&(-(m as i64) + 2 * i as i64))
                        .expect("degree present");
                    for alpha in compositions(n, i as u32) {
                        for beta in compositions(n, (m - i) as u32) {
                            basis.push(BasisVector::Poly {
                                alpha: alpha.clone(),
                                beta,
                            });
                        }
                    }
                }
            }
            CaseTag::Ext => {
                for i in 0..=m {
                    if m - i > n {
                        continue;
                    }
                    let basis = bases
                        .get_mut(&(-(m as i64) + 2 * i as i64))
                        .expect("degree present");
                    for theta in subsets(n, i) {
                        for xi in subsets(n, m - i) {
                            basis.push(BasisVector::Ext {
                                theta: theta.clone(),
                                xi,
                            });
                        }
                    }
                }
            }
            CaseTag::ExtUsual => {
                for j in 0..=n {
                    for k in 0..=n {
                        let degree = -(n as i64) + (j + k) as i64;
                        let basis = bases.get_mut(&degree).expect("degree present");
                        for theta in subsets(n, j) {
                            for xi in subsets(n, k) {
                                basis.push(BasisVector::Ext {
                                    theta: theta.clone(),
                                    xi,
                                });
                            }
                        }
                    }
                }
                for basis in bases.values_mut() {
                    basis.sort();
                }
            }
        }

        let mut index = HashMap::new();
        for (&d, basis) in &bases {
            for (pos, v) in basis.iter().enumerate() {
                index.insert(v.clone(), (d, pos));
            }
        }
        Ok(GradedSpace {
            case,
            n,
            m,
            degrees: dims.keys().copied().collect(),
            bases,
            index,
        })
    }

    /// All nominal degrees, ascending (pieces may be zero-dimensional).
    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn basis(&self, degree: i64) -> &[BasisVector] {
        self.bases.get(&degree).map_or(&[], Vec::as_slice)
    }

    pub fn dim(&self, degree: i64) -> usize {
        self.basis(degree).len()
    }

    pub fn total_dim(&self) -> usize {
        self.bases.values().map(Vec::len).sum()
    }

    pub fn dims(&self) -> BTreeMap<i64, usize> {
        self.bases.iter().map(|(&d, b)| (d, b.len())).collect()
    }

    /// `(degree, position)` of a basis vector, if it belongs to the space.
    pub fn locate(&self, v: &BasisVector) -> Option<(i64, usize)> {
        self.index.get(v).copied()
    }

    /// Most negative degree with a nonzero piece.
    pub fn lowest_degree(&self) -> Option<i64> {
        self.bases
            .iter()
            .find(|(_, b)| !b.is_empty())
            .map(|(&d, _)| d)
    }

    /// Degrees `≤ 0` carrying a nonzero piece, from the bottom up.
    pub fn nonpositive_degrees(&self) -> Vec<i64> {
        self.degrees
            .iter()
            .copied()
            .filter(|&d| d <= 0 && self.dim(d) > 0)
            .collect()
    }
}

/// Where a block map sends degree `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BlockTarget {
    /// Operator of degree `shift`: `H^d → H^{d+shift}`.
    Shift(i64),
    /// Bilinear pairing: block `d` is the Gram matrix of `H^d × H^{−d}`.
    Negated,
}

impl BlockTarget {
    pub fn apply(&self, degree: i64) -> i64 {
        match self {
            BlockTarget::Shift(s) => degree + s,
            BlockTarget::Negated => -degree,
        }
    }
}

/// Degree-indexed family of matrices.
///
/// For operators, block `d` has shape `dim(target(d)) × dim(d)` and acts on
/// coordinate columns. For pairings, block `d` has rows indexed by the basis
/// of `H^d` and columns by the basis of `H^{−d}`. A block is absent exactly
/// when its source or target piece is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBlockMap {
    pub target: BlockTarget,
    pub blocks: BTreeMap<i64, RatMatrix>,
}

impl DegreeBlockMap {
    pub fn new(target: BlockTarget) -> Self {
        DegreeBlockMap {
            target,
            blocks: BTreeMap::new(),
        }
    }

    pub fn shift(&self) -> Option<i64> {
        match self.target {
            BlockTarget::Shift(s) => Some(s),
            BlockTarget::Negated => None,
        }
    }

    pub fn block(&self, degree: i64) -> Option<&RatMatrix> {
        self.blocks.get(&degree)
    }

    /// Block at `degree`, or the zero matrix of the right shape when absent.
    pub fn block_or_zero(&self, space: &GradedSpace, degree: i64) -> RatMatrix {
        match self.blocks.get(&degree) {
            Some(b) => b.clone(),
            None => match self.target {
                BlockTarget::Shift(_) => {
                    RatMatrix::zeros(space.dim(self.target.apply(degree)), space.dim(degree))
                }
                BlockTarget::Negated => RatMatrix::zeros(space.dim(degree), space.dim(-degree)),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims_vec(space: &GradedSpace) -> Vec<(i64, usize)> {
        space.dims().into_iter().collect()
    }

    #[test]
    fn poly_dimensions() {
        let s = GradedSpace::build(CaseTag::Poly, 2, 2).unwrap();
        assert_eq!(dims_vec(&s), vec![(-2, 3), (0, 4), (2, 3)]);
    }

    #[test]
    fn ext_dimensions() {
        let s = GradedSpace::build(CaseTag::Ext, 3, 3).unwrap();
        assert_eq!(dims_vec(&s), vec![(-3, 1), (-1, 9), (1, 9), (3, 1)]);
        let s = GradedSpace::build(CaseTag::Ext, 1, 2).unwrap();
        assert_eq!(dims_vec(&s), vec![(-2, 0), (0, 1), (2, 0)]);
        assert_eq!(s.lowest_degree(), Some(0));
    }

    #[test]
    fn ext_usual_dimensions() {
        let s = GradedSpace::build(CaseTag::ExtUsual, 2, 0).unwrap();
        assert_eq!(dims_vec(&s), vec![(-2, 1), (-1, 4), (0, 6), (1, 4), (2, 1)]);
        assert_eq!(
            s.basis(-2),
            &[BasisVector::Ext {
                theta: SubsetMask::empty(),
                xi: SubsetMask::empty()
            }]
        );
    }

    #[test]
    fn build_errors() {
        assert!(matches!(
            GradedSpace::build(CaseTag::Ext, 2, 5),
            Err(Error::OutOfRange(_))
        ));
        assert!(matches!(
            GradedSpace::build(CaseTag::Poly, 0, 1),
            Err(Error::OutOfRange(_))
        ));
        let tiny = DimCap {
            total: 5,
            per_degree: 5,
        };
        assert!(matches!(
            GradedSpace::build_with_cap(CaseTag::Poly, 2, 2, tiny),
            Err(Error::DimensionCap { .. })
        ));
        let narrow = DimCap {
            total: 100,
            per_degree: 3,
        };
        assert!(matches!(
            GradedSpace::build_with_cap(CaseTag::Poly, 2, 2, narrow),
            Err(Error::DimensionCap { .. })
        ));
    }

    #[test]
    fn basis_order_is_lexicographic() {
        let s = GradedSpace::build(CaseTag::Poly, 1, 2).unwrap();
        let b: Vec<String> = s
            .degrees()
            .iter()
            .flat_map(|&d| s.basis(d).iter().map(|v| v.to_string()))
            .collect();
        assert_eq!(b, vec!["d^(0) ⊗ x^(2)", "d^(1) ⊗ x^(1)", "d^(2) ⊗ x^(0)"]);
    }

    #[test]
    fn built_dims_match_formulas() {
        for n in 1..=4 {
            for m in 0..=5 {
                for case in [CaseTag::Poly, CaseTag::Ext] {
                    if case == CaseTag::Ext && m > 2 * n {
                        continue;
                    }
                    let s = GradedSpace::build(case, n, m).unwrap();
                    for (d, expected) in expected_dims(case, n, m) {
                        assert_eq!(s.dim(d) as u128, expected, "{case} n={n} m={m} degree {d}");
                        assert_eq!(s.dim(d), s.dim(-d));
                    }
                }
            }
        }
    }

    #[test]
    fn case_tag_parsing() {
        assert_eq!("ext-usual".parse::<CaseTag>().unwrap(), CaseTag::ExtUsual);
        assert!("torus".parse::<CaseTag>().is_err());
    }
}
