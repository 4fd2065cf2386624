//! Graded characters of the coinvariant ring and the Novak–Rhoades sequence,
//! with the log-concavity experiments run on them.

use std::collections::{BTreeMap, HashMap};

use num_traits::{ToPrimitive, Zero};
use serde_json::json;

use super::{
    irr_multiplicities, verify_equivariant_logconcavity, GradedCharacter, MultiplicityVector,
};
use crate::combel::{
    character_table, class_representative, compositions, enumerate_standard_tableaux,
    standard_tableaux_count, subsets, CharVector, MultiIndex,
};
use crate::error::{Error, Result};
use crate::kahler::Verdict;
use crate::ratlin::{Rational, RowEchelon};

pub const DEFAULT_COINVARIANT_CAP: usize = 5;
pub const DEFAULT_NOVAK_CAP: usize = 7;

fn check_cap(what: &str, n: usize, cap: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfRange(format!("{what} needs n >= 1")));
    }
    if n > cap {
        return Err(Error::DimensionCap {
            what: format!("{what} n"),
            value: n as u128,
            cap: cap as u128,
        });
    }
    Ok(())
}

pub fn coinvariant_graded_character(n: usize) -> Result<GradedCharacter> {
    coinvariant_graded_character_with_cap(n, DEFAULT_COINVARIANT_CAP)
}

/// Character of `ℚ[x_1..x_n]_d / I_d` for `0 ≤ d ≤ n(n−1)/2`, where `I` is
/// generated by the elementary symmetric polynomials.
///
/// `I_d` is spanned by `e_j · x^γ`; after reduction to echelon form with pivot
/// columns `p_k`, the trace of `g` on `I_d` is `Σ_k (g·r_k)[p_k]`. `I_d` is
/// `S_n`-stable, so the quotient trace is the difference of traces.
pub fn coinvariant_graded_character_with_cap(n: usize, cap: usize) -> Result<GradedCharacter> {
    check_cap("coinvariant", n, cap)?;
    let table = character_table(n);
    let reps: Vec<Vec<usize>> = table.partitions.iter().map(class_representative).collect();
    let top = n * (n - 1) / 2;
    let mut gc = GradedCharacter::new(n);
    for d in 0..=top {
        let monos = compositions(n, d as u32);
        let index: HashMap<&MultiIndex, usize> =
            monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut ech = RowEchelon::new(monos.len());
        'span: for j in 1..=n.min(d) {
            let e_j = subsets(n, j);
            for gamma in compositions(n, (d - j) as u32) {
                let row: Vec<(usize, i64)> = e_j
                    .iter()
                    .map(|s| {
                        let mut v = gamma.0.clone();
                        for &k in s.elements() {
                            v[k] += 1;
                        }
                        (index[&MultiIndex(v)], 1)
                    })
                    .collect();
                ech.insert_sparse(&row);
                if ech.rank() == monos.len() {
                    break 'span;
                }
            }
        }
        let rref = ech.into_rref();
        let mut values = Vec::with_capacity(reps.len());
        for (g, mu) in reps.iter().zip(&table.partitions) {
            let image: Vec<usize> = monos.iter().map(|m| index[&m.permuted(g)]).collect();
            let trace_r = image.iter().enumerate().filter(|(i, &j)| *i == j).count() as i64;
            let mut trace_i = Rational::zero();
            for (row, &p) in rref.rows.iter().zip(&rref.pivot_cols) {
                for (j, q) in row {
                    if image[*j] == p {
                        trace_i += q;
                    }
                }
            }
            let trace_i = match (trace_i.is_integer(), trace_i.to_integer().to_i64()) {
                (true, Some(t)) => t,
                _ => {
                    return Err(Error::NotACharacter {
                        partition: mu.to_string(),
                        value: crate::ratlin::format_rational(&trace_i),
                    })
                }
            };
            values.push(trace_r - trace_i);
        }
        gc.pieces.insert(d as i64, CharVector { n, values });
    }
    Ok(gc)
}

/// Multiplicity of `V^λ` in each degree of the coinvariant ring, from the
/// major index of standard tableaux: `Σ_d mult_λ(d) q^d = Σ_T q^{maj T}`.
pub fn fake_degree_multiplicities(n: usize) -> BTreeMap<i64, MultiplicityVector> {
    let table = character_table(n);
    let top = (n * n.saturating_sub(1) / 2) as i64;
    let mut out: BTreeMap<i64, MultiplicityVector> = (0..=top)
        .map(|d| {
            (
                d,
                MultiplicityVector {
                    n,
                    values: vec![0; table.partitions.len()],
                },
            )
        })
        .collect();
    for (li, lambda) in table.partitions.iter().enumerate() {
        for t in enumerate_standard_tableaux(lambda) {
            let mut row_of = vec![0usize; n + 1];
            for (r, row) in t.iter().enumerate() {
                for &e in row {
                    row_of[e] = r;
                }
            }
            let maj: usize = (1..n).filter(|&i| row_of[i + 1] > row_of[i]).sum();
            out.get_mut(&(maj as i64))
                .expect("major index within range")
                .values[li] += 1;
        }
    }
    out
}

fn multiplicity_rows(gc: &GradedCharacter) -> Result<Vec<serde_json::Value>> {
    gc.pieces
        .iter()
        .map(|(d, chi)| Ok(json!({"degree": d, "dim": chi.dim(), "multiplicities": irr_multiplicities(chi)?.to_json()})))
        .collect()
}

pub fn verify_flag_conjecture(n: usize) -> Result<Verdict> {
    verify_flag_conjecture_with_cap(n, DEFAULT_COINVARIANT_CAP)
}

/// Equivariant log-concavity of the coinvariant ring of `S_n`, with the
/// per-degree multiplicity slack.
pub fn verify_flag_conjecture_with_cap(n: usize, cap: usize) -> Result<Verdict> {
    let gc = coinvariant_graded_character_with_cap(n, cap)?;
    let v = verify_equivariant_logconcavity(&gc)?;
    Ok(Verdict::new(
        v.pass,
        json!({
            "n": n,
            "total_dim": gc.pieces.values().map(CharVector::dim).sum::<i64>(),
            "pieces": multiplicity_rows(&gc)?,
            "steps": v.details["steps"],
        }),
    ))
}

/// `χ(V_n^k) = Σ_{ℓ(λ)=k} f^λ χ^λ` for `k = 1..n`.
pub fn novak_graded_character(n: usize) -> GradedCharacter {
    let table = character_table(n);
    let mut gc = GradedCharacter::new(n);
    for k in 1..=n {
        let mut chi = CharVector::zero(n);
        for (lambda, row) in table.partitions.iter().zip(&table.values) {
            if lambda.len() == k {
                let f = standard_tableaux_count(lambda) as i64;
                chi = chi.add(
                    &CharVector {
                        n,
                        values: row.clone(),
                    }
                    .scaled(f),
                );
            }
        }
        gc.pieces.insert(k as i64, chi);
    }
    gc
}

pub fn verify_novak_conjecture(n: usize) -> Result<Verdict> {
    verify_novak_conjecture_with_cap(n, DEFAULT_NOVAK_CAP)
}

/// Equivariant log-concavity of `⊕_k V_n^k`, with slack vectors.
pub fn verify_novak_conjecture_with_cap(n: usize, cap: usize) -> Result<Verdict> {
    check_cap("novak", n, cap)?;
    let gc = novak_graded_character(n);
    let v = verify_equivariant_logconcavity(&gc)?;
    Ok(Verdict::new(
        v.pass,
        json!({
            "n": n,
            "pieces": multiplicity_rows(&gc)?,
            "steps": v.details["steps"],
        }),
    ))
}
