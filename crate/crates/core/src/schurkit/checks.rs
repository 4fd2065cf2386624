use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::json;

use super::lr::lr_coefficients;
use super::poly::SchurExpansion;
use crate::combel::{partitions_of, Partition};
use crate::error::{Error, Result};
use crate::kahler::Verdict;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StripKind {
    /// Horizontal strips, multiplication by `s_(k)`.
    Row,
    /// Vertical strips, multiplication by `s_(1^k)`.
    Column,
}

impl StripKind {
    pub fn as_str(self) -> &'static str {
        match self {
            StripKind::Row => "row",
            StripKind::Column => "column",
        }
    }

    /// `(k)` or `(1^k)`.
    pub fn shape(self, k: usize) -> Partition {
        match self {
            StripKind::Row => Partition::new(vec![k]),
            StripKind::Column => Partition::new(vec![1; k]),
        }
    }
}

impl fmt::Display for StripKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for StripKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "row" => Ok(StripKind::Row),
            "column" | "col" => Ok(StripKind::Column),
            _ => Err(format!("unknown strip kind {s:?} (expected row or column)")),
        }
    }
}

/// Shapes `ν ⊇ λ` with `ν/λ` a horizontal (row) or vertical (column) strip of size `k`.
pub fn pieri_strips(lambda: &Partition, k: usize, kind: StripKind) -> Vec<Partition> {
    let len = lambda.len() + 1;
    let len = match kind {
        StripKind::Row => len,
        StripKind::Column => lambda.len() + k,
    };
    let mut out = Vec::new();
    let mut parts = Vec::with_capacity(len);
    grow_strip(lambda, kind, 0, len, k, &mut parts, &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn grow_strip(
    lambda: &Partition,
    kind: StripKind,
    row: usize,
    len: usize,
    left: usize,
    parts: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if row == len {
        if left == 0 {
            out.push(Partition::new(parts.clone()));
        }
        return;
    }
    let base = lambda.part(row);
    // horizontal strips interlace: λ_i ≤ ν_i ≤ λ_{i−1}; vertical ones add at most one box per row
    let max_add = match kind {
        StripKind::Row if row == 0 => left,
        StripKind::Row => (lambda.part(row - 1) - base).min(left),
        StripKind::Column => left.min(1),
    };
    for add in 0..=max_add {
        let v = base + add;
        if row > 0 && v > parts[row - 1] {
            break;
        }
        parts.push(v);
        grow_strip(lambda, kind, row + 1, len, left - add, parts, out);
        parts.pop();
    }
}

/// `s_λ · s_(k)` (resp. `s_(1^k)`) is the multiplicity-free sum over strips.
pub fn verify_pieri(lambda: &Partition, k: usize, kind: StripKind) -> Verdict {
    let strips = pieri_strips(lambda, k, kind);
    let mut predicted = SchurExpansion::new();
    for nu in &strips {
        predicted.add_term(nu.clone(), 1);
    }
    let lr = lr_coefficients(lambda, &kind.shape(k));
    Verdict::new(
        lr == predicted,
        json!({
            "lambda": lambda.to_string(),
            "k": k,
            "mode": kind.as_str(),
            "strips": strips.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "lr": lr.to_json(),
        }),
    )
}

/// `s_(i)² − s_(i−1) s_(i+1)` (or the column analogue) is Schur non-negative,
/// the symmetric-function form of log-concavity of `Sym^i` (resp. `Λ^i`).
pub fn verify_power_logconcavity(i: usize, kind: StripKind) -> Result<Verdict> {
    if i == 0 {
        return Err(Error::OutOfRange("power log-concavity needs i >= 1".into()));
    }
    let square = lr_coefficients(&kind.shape(i), &kind.shape(i));
    let outer = lr_coefficients(&kind.shape(i - 1), &kind.shape(i + 1));
    let diff = square.sub(&outer);
    Ok(Verdict::new(
        diff.is_nonnegative(),
        json!({"i": i, "mode": kind.as_str(), "difference": diff.to_json()}),
    ))
}

fn padded_sum(lambda: &Partition, mu: &Partition) -> Vec<usize> {
    let len = lambda.len().max(mu.len());
    lambda
        .padded(len)
        .iter()
        .zip(mu.padded(len))
        .map(|(a, b)| a + b)
        .collect()
}

/// `s²_{(λ+μ)/2} − s_λ s_μ` with `λ + μ` taken after zero padding.
pub fn schur_nonneg_witness(lambda: &Partition, mu: &Partition) -> Result<SchurExpansion> {
    let sum = padded_sum(lambda, mu);
    if sum.iter().any(|p| p % 2 == 1) {
        return Err(Error::OddParts(Partition::new(sum).to_string()));
    }
    let half = Partition::new(sum.iter().map(|p| p / 2).collect());
    Ok(lr_coefficients(&half, &half).sub(&lr_coefficients(lambda, mu)))
}

pub fn verify_schur_nonneg(lambda: &Partition, mu: &Partition) -> Result<Verdict> {
    let witness = schur_nonneg_witness(lambda, mu)?;
    Ok(Verdict::new(
        witness.is_nonnegative(),
        json!({"lambda": lambda.to_string(), "mu": mu.to_string(), "witness": witness.to_json()}),
    ))
}

/// Ordered pairs with `|λ| = |μ| ≤ max_size`, at most `max_len` rows each and
/// `λ + μ` even after padding.
pub fn schur_nonneg_grid(max_size: usize, max_len: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for size in 0..=max_size {
        let shapes: Vec<Partition> = partitions_of(size)
            .into_iter()
            .filter(|p| p.len() <= max_len)
            .collect();
        for l in &shapes {
            for m in &shapes {
                if padded_sum(l, m).iter().all(|p| p % 2 == 0) {
                    out.push((l.clone(), m.clone()));
                }
            }
        }
    }
    out
}

/// Weights `λ_j = start + j·step` for `j < count` in `GL_n`, `n` at least the
/// padded length. Every weight must be dominant; a common shift by a power of
/// the determinant makes them partitions without changing any comparison.
pub fn verify_line_logconcavity(
    start: &[i64],
    step: &[i64],
    count: usize,
    rank: Option<usize>,
) -> Result<Verdict> {
    let n = rank.unwrap_or(0).max(start.len()).max(step.len());
    if n == 0 || count == 0 {
        return Err(Error::OutOfRange(
            "a line needs at least one coordinate and one weight".into(),
        ));
    }
    let pad = |v: &[i64]| {
        let mut v = v.to_vec();
        v.resize(n, 0);
        v
    };
    let (start, step) = (pad(start), pad(step));
    let weights: Vec<Vec<i64>> = (0..count as i64)
        .map(|j| start.iter().zip(&step).map(|(a, s)| a + j * s).collect())
        .collect();
    for w in &weights {
        if !w.windows(2).all(|p| p[0] >= p[1]) {
            return Err(Error::NotDominant(format!("{w:?}")));
        }
    }
    let shift = weights.iter().flatten().copied().min().unwrap_or(0).min(0);
    let shapes: Vec<Partition> = weights
        .iter()
        .map(|w| Partition::new(w.iter().map(|&a| (a - shift) as usize).collect()))
        .collect();
    let mut steps = Vec::new();
    let mut pass = true;
    for j in 1..count.saturating_sub(1) {
        let square = lr_coefficients(&shapes[j], &shapes[j]).restrict_rows(n);
        let outer = lr_coefficients(&shapes[j - 1], &shapes[j + 1]).restrict_rows(n);
        let diff = square.sub(&outer);
        let ok = diff.is_nonnegative();
        pass &= ok;
        steps.push(
            json!({"index": j, "weight": weights[j], "pass": ok, "difference": diff.to_json()}),
        );
    }
    Ok(Verdict::new(
        pass,
        json!({"rank": n, "shift": shift, "weights": weights, "steps": steps}),
    ))
}

/// `lambda,mu,nu,coefficient` rows, one per nonzero term.
pub fn expansions_csv(records: &[(Partition, Partition, SchurExpansion)]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["lambda", "mu", "nu", "coefficient"])
        .expect("in-memory write");
    for (l, m, e) in records {
        for (nu, c) in e.descending() {
            w.write_record([l.to_string(), m.to_string(), nu.to_string(), c.to_string()])
                .expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn pieri_named() {
        assert_eq!(
            pieri_strips(&p(&[2, 1]), 1, StripKind::Row),
            vec![p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1])]
        );
        assert_eq!(
            pieri_strips(&p(&[2, 1]), 2, StripKind::Row),
            vec![p(&[4, 1]), p(&[3, 2]), p(&[3, 1, 1]), p(&[2, 2, 1])]
        );
        assert_eq!(
            pieri_strips(&p(&[2, 1]), 2, StripKind::Column),
            vec![p(&[3, 2]), p(&[3, 1, 1]), p(&[2, 2, 1]), p(&[2, 1, 1, 1])]
        );
        assert!(verify_pieri(&p(&[2, 1]), 1, StripKind::Row).pass);
        for kind in [StripKind::Row, StripKind::Column] {
            assert_eq!(pieri_strips(&p(&[3, 1]), 0, kind), vec![p(&[3, 1])]);
        }
    }

    #[test]
    fn pieri_exhaustive() {
        for size in 0..=5 {
            for l in partitions_of(size) {
                for k in 0..=4 {
                    for kind in [StripKind::Row, StripKind::Column] {
                        assert!(verify_pieri(&l, k, kind).pass, "{l} {k} {kind}");
                    }
                }
            }
        }
    }

    /// Pieri gives `s_(i)² − s_(i−1)s_(i+1) = s_(i,i)`, and `s_(2^i)` for columns.
    #[test]
    fn power_logconcavity() {
        for i in 1..=6 {
            for kind in [StripKind::Row, StripKind::Column] {
                let v = verify_power_logconcavity(i, kind).unwrap();
                assert!(v.pass);
                let shape = match kind {
                    StripKind::Row => p(&[i, i]),
                    StripKind::Column => p(&vec![2; i]),
                };
                assert_eq!(
                    v.details["difference"],
                    json!({shape.to_string(): 1}),
                    "i={i} {kind}"
                );
            }
        }
        assert!(verify_power_logconcavity(0, StripKind::Row).is_err());
    }

    #[test]
    fn nonneg_named() {
        let v = verify_schur_nonneg(&p(&[2, 1]), &p(&[2, 1])).unwrap();
        assert!(v.pass);
        assert_eq!(v.details["witness"], json!({}));
        assert!(verify_schur_nonneg(&p(&[3, 1]), &p(&[1, 1])).unwrap().pass);
        let w = schur_nonneg_witness(&p(&[2]), &Partition::empty()).unwrap();
        assert_eq!(w, SchurExpansion::single(p(&[1, 1])));
        assert!(matches!(
            verify_schur_nonneg(&p(&[2]), &p(&[1])),
            Err(Error::OddParts(_))
        ));
    }

    #[test]
    fn nonneg_grid_shape() {
        let grid = schur_nonneg_grid(2, 4);
        // (∅,∅); (2)(2), (1,1)(1,1); size 1 has (1)+(1) = (2)
        assert!(grid.contains(&(p(&[1]), p(&[1]))));
        assert!(!grid.contains(&(p(&[2]), p(&[1, 1]))));
        assert_eq!(grid.len(), 4);
    }

    #[test]
    fn line_named() {
        let v = verify_line_logconcavity(&[1], &[1], 4, None).unwrap();
        assert!(v.pass);
        assert!(
            verify_line_logconcavity(&[2, 1], &[1, 1], 3, None)
                .unwrap()
                .pass
        );
        assert!(
            verify_line_logconcavity(&[2, 1], &[0, 0], 3, None)
                .unwrap()
                .pass
        );
        assert!(
            verify_line_logconcavity(&[1], &[1], 5, Some(3))
                .unwrap()
                .pass
        );
        // negative entries are dominant weights of GL_n too
        assert!(
            verify_line_logconcavity(&[0, -1], &[1, -1], 4, None)
                .unwrap()
                .pass
        );
        assert!(matches!(
            verify_line_logconcavity(&[1, 0], &[-1, 1], 3, None),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn csv_rows() {
        let e = lr_coefficients(&p(&[1]), &p(&[1]));
        let csv = expansions_csv(&[(p(&[1]), p(&[1]), e)]);
        assert_eq!(
            csv,
            "lambda,mu,nu,coefficient\n(1),(1),(2),1\n(1),(1),\"(1,1)\",1\n"
        );
    }
}
