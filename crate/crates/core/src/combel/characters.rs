//! Irreducible characters of `S_n` by the Murnaghan–Nakayama rule.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use super::factorial;
use super::partition::{partitions_of, standard_tableaux_count, Partition};
use crate::error::{Error, Result};

/// Class function of `S_n`, one integer per conjugacy class, classes
/// ordered as in [`partitions_of`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CharVector {
    pub n: usize,
    pub values: Vec<i64>,
}

impl CharVector {
    pub fn zero(n: usize) -> Self {
        CharVector {
            n,
            values: vec![0; partitions_of(n).len()],
        }
    }

    /// Value on the identity class `(1ⁿ)`, i.e. the dimension.
    pub fn dim(&self) -> i64 {
        *self.values.last().expect("S_n has at least one class")
    }

    /// Character of the tensor product (pointwise product).
    pub fn tensor(&self, other: &CharVector) -> CharVector {
        assert_eq!(self.n, other.n, "characters of different groups");
        CharVector {
            n: self.n,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a * b)
                .collect(),
        }
    }

    pub fn add(&self, other: &CharVector) -> CharVector {
        assert_eq!(self.n, other.n, "characters of different groups");
        CharVector {
            n: self.n,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scaled(&self, k: i64) -> CharVector {
        CharVector {
            n: self.n,
            values: self.values.iter().map(|a| a * k).collect(),
        }
    }
}

/// Character table of `S_n` with class sizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharTable {
    pub n: usize,
    /// Shapes and classes, both in reverse-lexicographic order.
    pub partitions: Vec<Partition>,
    pub class_sizes: Vec<u128>,
    /// `values[λ][μ] = χ^λ(μ)`.
    pub values: Vec<Vec<i64>>,
}

impl CharTable {
    fn build(n: usize) -> CharTable {
        let partitions = partitions_of(n);
        let mut memo = HashMap::new();
        let values = partitions
            .iter()
            .map(|l| {
                partitions
                    .iter()
                    .map(|m| mn_memo(l, m.parts(), &mut memo))
                    .collect()
            })
            .collect();
        let class_sizes = partitions.iter().map(class_size).collect();
        CharTable {
            n,
            partitions,
            class_sizes,
            values,
        }
    }

    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.partitions.iter().position(|p| p == lambda)
    }

    pub fn irreducible(&self, lambda: &Partition) -> CharVector {
        let i = self.index_of(lambda).expect("partition of n");
        CharVector {
            n: self.n,
            values: self.values[i].clone(),
        }
    }

    pub fn group_order(&self) -> u128 {
        factorial(self.n as u64)
    }

    /// `Σ_μ |C_μ| χ(μ) ψ(μ)`, i.e. `n!·⟨χ, ψ⟩` (characters are real).
    pub fn weighted_pairing(&self, chi: &[i64], psi: &[i64]) -> i128 {
        chi.iter()
            .zip(psi)
            .zip(&self.class_sizes)
            .map(|((a, b), c)| (*a as i128) * (*b as i128) * (*c as i128))
            .sum()
    }
}

/// Shared character table for `S_n`; built on first request, then read-only.
pub fn character_table(n: usize) -> Arc<CharTable> {
    static TABLES: OnceLock<Mutex<HashMap<usize, Arc<CharTable>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = tables
        .lock()
        .expect("character table cache poisoned")
        .get(&n)
    {
        return Arc::clone(t);
    }
    let built = Arc::new(CharTable::build(n));
    let mut guard = tables.lock().expect("character table cache poisoned");
    Arc::clone(guard.entry(n).or_insert(built))
}

/// `z_μ = Π i^{m_i} m_i!`, the centralizer order of a permutation of cycle type `μ`.
pub fn z_value(mu: &Partition) -> u128 {
    mu.multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &m)| (i as u128).pow(m as u32) * factorial(m as u64))
        .product()
}

pub fn class_size(mu: &Partition) -> u128 {
    factorial(mu.size() as u64) / z_value(mu)
}

/// A permutation of cycle type `μ`, cycles on consecutive points.
pub fn class_representative(mu: &Partition) -> Vec<usize> {
    let mut perm = Vec::with_capacity(mu.size());
    let mut start = 0;
    for &p in mu.parts() {
        for i in 0..p {
            perm.push(start + (i + 1) % p);
        }
        start += p;
    }
    perm
}

/// `χ^λ(μ)` by recursive rim-hook removal.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    Ok(mn_memo(lambda, mu.parts(), &mut HashMap::new()))
}

fn mn_memo(
    lambda: &Partition,
    mu: &[usize],
    memo: &mut HashMap<(Partition, Vec<usize>), i64>,
) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return 1;
    };
    if rest.iter().all(|&p| p == 1) && r == 1 {
        return standard_tableaux_count(lambda) as i64;
    }
    let key = (lambda.clone(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let value = rim_hooks(lambda, r)
        .into_iter()
        .map(|(sign, smaller)| sign * mn_memo(&smaller, rest, memo))
        .sum();
    memo.insert(key, value);
    value
}

/// All ways to remove a rim hook of length `r`, with sign `(−1)^{height}`.
///
/// Works on the beta-set `{λ_i + ℓ − 1 − i}`: removing a hook moves one bead
/// from `b` to the empty position `b − r`; the height is the number of beads
/// strictly between.
fn rim_hooks(lambda: &Partition, r: usize) -> Vec<(i64, Partition)> {
    let len = lambda.len();
    let beta: Vec<usize> = (0..len).map(|i| lambda.part(i) + len - 1 - i).collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (len - 1 - i))
            .collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        out.push((sign, Partition::new(parts)));
    }
    out
}
