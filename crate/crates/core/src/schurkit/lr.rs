//! Littlewood–Richardson coefficients by enumeration of skew tableaux whose
//! reverse reading word is a lattice word.

use super::poly::SchurExpansion;
use crate::combel::{partitions_of, Partition};

/// `c^ν_{λμ}`: fillings of `ν/λ` with content `μ`, rows weakly increasing,
/// columns strictly increasing, reading right to left then top to bottom
/// never showing more `k+1`s than `k`s.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.size() != lambda.size() + mu.size() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    let cells: Vec<(usize, usize)> = (0..nu.len())
        .flat_map(|r| (lambda.part(r)..nu.part(r)).rev().map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = (0..nu.len()).map(|r| vec![0; nu.part(r)]).collect();
    let mut counts = vec![0usize; mu.len()];
    count_fillings(lambda, mu, &cells, 0, &mut grid, &mut counts)
}

fn count_fillings(
    lambda: &Partition,
    mu: &Partition,
    cells: &[(usize, usize)],
    idx: usize,
    grid: &mut [Vec<usize>],
    counts: &mut [usize],
) -> u64 {
    let Some(&(r, c)) = cells.get(idx) else {
        return 1;
    };
    let hi = if c + 1 < grid[r].len() {
        grid[r][c + 1]
    } else {
        mu.len()
    };
    let lo = if r > 0 && c >= lambda.part(r - 1) {
        grid[r - 1][c] + 1
    } else {
        1
    };
    let mut total = 0;
    for v in lo..=hi {
        let k = v - 1;
        if counts[k] == mu.part(k) || (k > 0 && counts[k] == counts[k - 1]) {
            continue;
        }
        grid[r][c] = v;
        counts[k] += 1;
        total += count_fillings(lambda, mu, cells, idx + 1, grid, counts);
        counts[k] -= 1;
    }
    total
}

/// `s_λ · s_μ = Σ_ν c^ν_{λμ} s_ν`.
pub fn lr_coefficients(lambda: &Partition, mu: &Partition) -> SchurExpansion {
    let mut out = SchurExpansion::new();
    for nu in partitions_of(lambda.size() + mu.size()) {
        if nu.len() <= lambda.len() + mu.len() {
            out.add_term(nu.clone(), lr_coefficient(lambda, mu, &nu) as i64);
        }
    }
    out
}

/// Product of two Schur expansions in the Schur basis.
pub fn schur_product(a: &SchurExpansion, b: &SchurExpansion) -> SchurExpansion {
    let mut out = SchurExpansion::new();
    for (l, &cl) in &a.terms {
        for (m, &cm) in &b.terms {
            for (nu, c) in lr_coefficients(l, m).descending() {
                out.add_term(nu.clone(), cl * cm * c);
            }
        }
    }
    out
}
