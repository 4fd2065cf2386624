//! Combinatorial building blocks: exponent vectors, subsets, partitions,
//! Young tableaux and irreducible characters of the symmetric group.

mod characters;
mod partition;

pub use characters::{
    character_table, class_representative, class_size, mn_character, z_value, CharTable, CharVector,
};
pub use partition::{
    enumerate_standard_tableaux, hook_lengths, partitions_of, standard_tableaux_count, Partition,
};

use std::fmt;

use serde::{Deserialize, Serialize};

/// Exponent vector of a monomial in `n` variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiIndex(pub Vec<u32>);

impl MultiIndex {
    pub fn zero(n: usize) -> Self {
        MultiIndex(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total degree `|α|`.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `α! = Π α_i!`
    pub fn factorial(&self) -> u128 {
        self.0
            .iter()
            .map(|&a| (1..=a as u128).product::<u128>())
            .product()
    }

    pub fn with_increment(&self, k: usize) -> Self {
        let mut v = self.0.clone();
        v[k] += 1;
        MultiIndex(v)
    }

    pub fn with_decrement(&self, k: usize) -> Option<Self> {
        if self.0[k] == 0 {
            return None;
        }
        let mut v = self.0.clone();
        v[k] -= 1;
        Some(MultiIndex(v))
    }

    /// Relabels variables by `perm`: `x_i ↦ x_{perm[i]}`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut v = vec![0; self.0.len()];
        for (i, &a) in self.0.iter().enumerate() {
            v[perm[i]] = a;
        }
        MultiIndex(v)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All exponent vectors of length `n` and total degree `m`, in ascending
/// lexicographic order (`(0,2) < (1,1) < (2,0)`).
pub fn compositions(n: usize, m: u32) -> Vec<MultiIndex> {
    assert!(n >= 1, "compositions need at least one variable");
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    fill_compositions(0, m, &mut current, &mut out);
    out
}

fn fill_compositions(pos: usize, left: u32, current: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
    if pos + 1 == current.len() {
        current[pos] = left;
        out.push(MultiIndex(current.clone()));
        return;
    }
    for a in 0..=left {
        current[pos] = a;
        fill_compositions(pos + 1, left - a, current, out);
    }
}

/// Subset of `{0, …, n−1}` stored as its ascending element list.
///
/// Ordered by size first and lexicographically within a size, which is the
/// ascending order of wedge monomials used for all exterior bases.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SubsetMask(Vec<usize>);

impl SubsetMask {
    /// Panics unless `elements` is strictly increasing.
    pub fn new(elements: Vec<usize>) -> Self {
        assert!(
            elements.windows(2).all(|w| w[0] < w[1]),
            "subset elements must be strictly increasing"
        );
        SubsetMask(elements)
    }

    pub fn empty() -> Self {
        SubsetMask(Vec::new())
    }

    pub fn full(n: usize) -> Self {
        SubsetMask((0..n).collect())
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, k: usize) -> bool {
        self.0.binary_search(&k).is_ok()
    }

    pub fn complement(&self, n: usize) -> Self {
        SubsetMask((0..n).filter(|k| !self.contains(*k)).collect())
    }

    /// Elements as 1-based indices, for display and serialization.
    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|k| k + 1).collect()
    }

    /// Left wedge by the `k`-th generator: `v_k ∧ v_S = ±v_{S∪{k}}`.
    pub fn wedge_left(&self, k: usize) -> Option<(i64, SubsetMask)> {
        match self.0.binary_search(&k) {
            Ok(_) => None,
            Err(pos) => {
                let mut v = self.0.clone();
                v.insert(pos, k);
                Some((parity_sign(pos), SubsetMask(v)))
            }
        }
    }

    /// Left contraction removing the `k`-th generator, the degree −1
    /// anti-derivation with `ι_k(v_k) = 1`.
    pub fn contract(&self, k: usize) -> Option<(i64, SubsetMask)> {
        match self.0.binary_search(&k) {
            Ok(pos) => {
                let mut v = self.0.clone();
                v.remove(pos);
                Some((parity_sign(pos), SubsetMask(v)))
            }
            Err(_) => None,
        }
    }

    /// `v_S ∧ v_T = sign · v_{S∪T}`; `None` when the subsets overlap.
    pub fn wedge(&self, other: &SubsetMask) -> Option<(i64, SubsetMask)> {
        let mut inversions = 0usize;
        let mut merged = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            if j == other.0.len() || (i < self.0.len() && self.0[i] < other.0[j]) {
                merged.push(self.0[i]);
                i += 1;
            } else if i == self.0.len() || other.0[j] < self.0[i] {
                // other[j] jumps over the remaining elements of self
                inversions += self.0.len() - i;
                merged.push(other.0[j]);
                j += 1;
            } else {
                return None;
            }
        }
        Some((parity_sign(inversions), SubsetMask(merged)))
    }

    /// Image under `k ↦ perm[k]` together with the sign of re-sorting the wedge.
    pub fn permuted(&self, perm: &[usize]) -> (i64, SubsetMask) {
        let image: Vec<usize> = self.0.iter().map(|&k| perm[k]).collect();
        let mut inversions = 0;
        for a in 0..image.len() {
            for b in a + 1..image.len() {
                if image[a] > image[b] {
                    inversions += 1;
                }
            }
        }
        let mut sorted = image;
        sorted.sort_unstable();
        (parity_sign(inversions), SubsetMask(sorted))
    }
}

impl PartialOrd for SubsetMask {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SubsetMask {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_based().iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

fn parity_sign(count: usize) -> i64 {
    if count.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// All `k`-subsets of `{0, …, n−1}` in ascending lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<SubsetMask> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut current = Vec::with_capacity(k);
    fill_subsets(0, n, k, &mut current, &mut out);
    out
}

fn fill_subsets(
    start: usize,
    n: usize,
    k: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<SubsetMask>,
) {
    if current.len() == k {
        out.push(SubsetMask(current.clone()));
        return;
    }
    let need = k - current.len();
    for e in start..=(n - need) {
        current.push(e);
        fill_subsets(e + 1, n, k, current, out);
        current.pop();
    }
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

pub fn factorial(n: u64) -> u128 {
    (1..=n as u128).product()
}

/// Validates a permutation of `{0, …, n−1}` given as its image list.
pub fn is_permutation(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    perm.iter()
        .all(|&p| p < perm.len() && !std::mem::replace(&mut seen[p], true))
}

/// The adjacent transposition `s_i` swapping `i` and `i+1` (0-based).
pub fn adjacent_transposition(n: usize, i: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.swap(i, i + 1);
    p
}
