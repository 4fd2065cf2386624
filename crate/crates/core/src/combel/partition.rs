use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Integer partition with weakly decreasing positive parts.
///
/// The derived ordering is lexicographic on the parts; the canonical class
/// order used for character vectors is the reverse of it (see
/// [`partitions_of`]).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_i` with zero padding past the last part.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Parts zero-padded to length `len` (never truncates).
    pub fn padded(&self, len: usize) -> Vec<usize> {
        let mut v = self.0.clone();
        if v.len() < len {
            v.resize(len, 0);
        }
        v
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        Partition(
            (0..cols)
                .map(|j| self.0.iter().filter(|&&p| p > j).count())
                .collect(),
        )
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| self.0[i] >= other.0[i])
    }

    /// Multiplicities `m_i` of each part size `i ≥ 1` (index 0 unused).
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(0) + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = String;

    /// Accepts `"3,1,1"`, `"(3,1,1)"`, `"0"` or the empty string.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        if trimmed.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = trimmed
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| format!("bad part {p:?}: {e}"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(format!("parts of {s:?} are not weakly decreasing"));
        }
        Ok(Partition::new(parts))
    }
}

impl From<&[usize]> for Partition {
    fn from(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec())
    }
}

/// All partitions of `n` in reverse-lexicographic order: `(n)` first, `(1ⁿ)` last.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_partitions(n, n, &mut current, &mut out);
    out
}

fn fill_partitions(
    left: usize,
    max_part: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if left == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for p in (1..=max_part.min(left)).rev() {
        current.push(p);
        fill_partitions(left - p, p, current, out);
        current.pop();
    }
}

/// Hook lengths, row by row.
pub fn hook_lengths(lambda: &Partition) -> Vec<Vec<usize>> {
    let conj = lambda.conjugate();
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &row)| {
            (0..row)
                .map(|j| (row - j - 1) + (conj.part(j) - i - 1) + 1)
                .collect()
        })
        .collect()
}

/// `f^λ = n! / Π hooks`.
pub fn standard_tableaux_count(lambda: &Partition) -> u128 {
    let n = lambda.size() as u128;
    let num: u128 = (1..=n).product();
    let hooks: u128 = hook_lengths(lambda)
        .into_iter()
        .flatten()
        .map(|h| h as u128)
        .product();
    num / hooks
}

/// Explicit standard Young tableaux of shape `λ` (rows of entries `1..=n`).
/// Exponential; meant for small shapes and as a cross-check of the hook formula.
pub fn enumerate_standard_tableaux(lambda: &Partition) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); lambda.len()];
    place_next(lambda, 1, &mut rows, &mut out);
    out
}

fn place_next(
    lambda: &Partition,
    next: usize,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    if next > lambda.size() {
        out.push(rows.clone());
        return;
    }
    for r in 0..lambda.len() {
        let len = rows[r].len();
        let fits_row = len < lambda.part(r);
        let fits_above = r == 0 || rows[r - 1].len() > len;
        if fits_row && fits_above {
            rows[r].push(next);
            place_next(lambda, next + 1, rows, out);
            rows[r].pop();
        }
    }
}
