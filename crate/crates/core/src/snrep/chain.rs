//! The strong log-concavity chain `V^0⊗V^m ⊂ V^1⊗V^{m−1} ⊂ …`, checked both
//! by characters and by injectivity of the explicit Lefschetz map.

use serde_json::json;

use super::{character_of_piece, check_subrepresentation};
use crate::combel::{character_table, CharVector};
use crate::error::{Error, Result};
use crate::kahler::Verdict;
use crate::ratlin::rank;
use crate::spaces::{raising_l, CaseTag, GradedSpace};

/// Coefficients of `Π_c f(len c)` truncated at degree `k`, for a cycle type.
fn cycle_product(cycles: &[usize], k: usize, factor: impl Fn(usize) -> Vec<i64>) -> i64 {
    let mut poly = vec![0i64; k + 1];
    poly[0] = 1;
    for &c in cycles {
        let f = factor(c);
        let mut next = vec![0i64; k + 1];
        for (i, &a) in poly.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in f.iter().enumerate() {
                if i + j <= k {
                    next[i + j] += a * b;
                }
            }
        }
        poly = next;
    }
    poly[k]
}

/// `χ_{Sym^k(ℂ^n)}(μ)`: coefficient of `q^k` in `Π_c 1/(1 − q^{len c})`.
pub fn symmetric_power_character(n: usize, k: usize) -> CharVector {
    let table = character_table(n);
    let values = table
        .partitions
        .iter()
        .map(|mu| {
            cycle_product(mu.parts(), k, |c| {
                (0..=k).map(|j| i64::from(j % c == 0)).collect()
            })
        })
        .collect();
    CharVector { n, values }
}

/// `χ_{Λ^k(ℂ^n)}(μ)`: coefficient of `q^k` in `Π_c (1 − (−q)^{len c})`.
pub fn exterior_power_character(n: usize, k: usize) -> CharVector {
    let table = character_table(n);
    let values = table
        .partitions
        .iter()
        .map(|mu| {
            cycle_product(mu.parts(), k, |c| {
                let mut f = vec![0i64; c + 1];
                f[0] = 1;
                f[c] = if c % 2 == 0 { -1 } else { 1 };
                f
            })
        })
        .collect();
    CharVector { n, values }
}

/// Character of `V^i ⊗ V^{m−i}` from the factor formulas alone.
fn chain_term(case: CaseTag, n: usize, m: usize, i: usize) -> CharVector {
    match case {
        CaseTag::Poly => {
            symmetric_power_character(n, i).tensor(&symmetric_power_character(n, m - i))
        }
        _ => {
            if m - i > n || i > n {
                CharVector::zero(n)
            } else {
                exterior_power_character(n, i).tensor(&exterior_power_character(n, m - i))
            }
        }
    }
}

/// For each step `i → i+1` with `2i + 2 ≤ m`: (i) multiplicities of
/// `V^i⊗V^{m−i}` are dominated by those of `V^{i+1}⊗V^{m−i−1}`; (ii) the
/// block of `L` from degree `−m+2i` to `−m+2i+2` is injective. Passes when
/// both hold at every step and the two verdicts agree.
pub fn verify_strong_chain(space: &GradedSpace) -> Result<Verdict> {
    if space.case == CaseTag::ExtUsual {
        return Err(Error::OutOfRange(
            "the strong chain is defined for poly and ext spaces".into(),
        ));
    }
    let (n, m) = (space.n, space.m);
    let l = raising_l(space);
    let mut steps = Vec::new();
    let mut pass = true;
    let mut i = 0;
    while 2 * i + 2 <= m {
        let d = -(m as i64) + 2 * i as i64;
        let (small, big) = (
            chain_term(space.case, n, m, i),
            chain_term(space.case, n, m, i + 1),
        );
        let traces_agree =
            small == character_of_piece(space, d) && big == character_of_piece(space, d + 2);
        let by_characters = check_subrepresentation(&small, &big)?;
        let r = rank(&l.block_or_zero(space, d));
        let injective = r == space.dim(d);
        let agree = by_characters.pass == injective;
        pass &= by_characters.pass && injective && agree && traces_agree;
        steps.push(json!({
            "step": format!("{i}->{}", i + 1),
            "degree": d,
            "characters": by_characters.pass,
            "injective": injective,
            "rank": r,
            "dim": space.dim(d),
            "agree": agree,
            "traces_agree": traces_agree,
            "slack": by_characters.details["slack"],
        }));
        i += 1;
    }
    Ok(Verdict::new(
        pass,
        json!({ "case": space.case, "n": n, "m": m, "steps": steps }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_characters_by_counting() {
        // Sym² of the permutation rep of S_2: monomials x1², x1x2, x2²; swap fixes one.
        assert_eq!(symmetric_power_character(2, 2).values, vec![1, 3]);
        assert_eq!(exterior_power_character(3, 0).values, vec![1, 1, 1]);
        // Λ¹ of S_3 = permutation rep: fixed points of (3), (2,1), (1,1,1).
        assert_eq!(exterior_power_character(3, 1).values, vec![0, 1, 3]);
        assert_eq!(exterior_power_character(3, 4), CharVector::zero(3));
    }

    #[test]
    fn chain_examples() {
        let v = verify_strong_chain(&GradedSpace::build(CaseTag::Poly, 2, 2).unwrap()).unwrap();
        assert!(v.pass);
        // sign multiplicity gap 1 at step 0 -> 1
        assert_eq!(v.details["steps"][0]["slack"]["(1,1)"], 1);
        assert!(
            verify_strong_chain(&GradedSpace::build(CaseTag::Poly, 2, 3).unwrap())
                .unwrap()
                .pass
        );
        assert!(
            verify_strong_chain(&GradedSpace::build(CaseTag::Ext, 3, 4).unwrap())
                .unwrap()
                .pass
        );
        let v = verify_strong_chain(&GradedSpace::build(CaseTag::Poly, 3, 0).unwrap()).unwrap();
        assert!(v.pass);
        assert_eq!(v.details["steps"].as_array().unwrap().len(), 0);
        assert!(
            verify_strong_chain(&GradedSpace::build(CaseTag::ExtUsual, 2, 0).unwrap()).is_err()
        );
    }
}
