use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use serde_json::{json, Value};

use super::lr::lr_coefficients;
use crate::combel::{MultiIndex, Partition};
use crate::error::{Error, Result};
use crate::kahler::Verdict;

fn add_to<K: Ord>(terms: &mut BTreeMap<K, i64>, key: K, c: i64) {
    match terms.entry(key) {
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if *o.get() == 0 {
                o.remove();
            }
        }
        Entry::Vacant(v) => {
            v.insert(c);
        }
    }
}

/// Polynomial in `n` variables with integer coefficients; zero terms are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialPoly {
    pub n: usize,
    pub terms: BTreeMap<MultiIndex, i64>,
}

impl MonomialPoly {
    pub fn zero(n: usize) -> Self {
        MonomialPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn coefficient(&self, exponent: &MultiIndex) -> i64 {
        self.terms.get(exponent).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, exponent: MultiIndex, c: i64) {
        debug_assert_eq!(exponent.len(), self.n);
        if c == 0 {
            return;
        }
        add_to(&mut self.terms, exponent, c);
    }

    pub fn add_scaled(&mut self, other: &MonomialPoly, k: i64) {
        assert_eq!(self.n, other.n, "variable counts differ");
        for (e, &c) in &other.terms {
            self.add_term(e.clone(), k * c);
        }
    }

    pub fn mul(&self, other: &MonomialPoly) -> MonomialPoly {
        assert_eq!(self.n, other.n, "variable counts differ");
        let mut acc: HashMap<MultiIndex, i64> = HashMap::new();
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                let e = MultiIndex(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect());
                *acc.entry(e).or_insert(0) += ca * cb;
            }
        }
        MonomialPoly {
            n: self.n,
            terms: acc.into_iter().filter(|(_, c)| *c != 0).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Invariance under every adjacent transposition of the variables.
    pub fn is_symmetric(&self) -> bool {
        (0..self.n.saturating_sub(1)).all(|i| {
            let mut perm: Vec<usize> = (0..self.n).collect();
            perm.swap(i, i + 1);
            self.terms
                .iter()
                .all(|(e, c)| self.coefficient(&e.permuted(&perm)) == *c)
        })
    }

    /// Value at `x_1 = … = x_n = 1`.
    pub fn eval_ones(&self) -> i128 {
        self.terms.values().map(|&c| c as i128).sum()
    }
}

/// Finitely supported integer combination of Schur functions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    pub terms: BTreeMap<Partition, i64>,
}

impl SchurExpansion {
    pub fn new() -> Self {
        SchurExpansion::default()
    }

    pub fn single(lambda: Partition) -> Self {
        let mut s = SchurExpansion::new();
        s.add_term(lambda, 1);
        s
    }

    pub fn coefficient(&self, lambda: &Partition) -> i64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, lambda: Partition, c: i64) {
        if c == 0 {
            return;
        }
        add_to(&mut self.terms, lambda, c);
    }

    pub fn sub(&self, other: &SchurExpansion) -> SchurExpansion {
        let mut out = self.clone();
        for (p, &c) in &other.terms {
            out.add_term(p.clone(), -c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c >= 0)
    }

    /// Drops `s_ν` with `ℓ(ν) > n`, which vanish in `n` variables.
    pub fn restrict_rows(&self, n: usize) -> SchurExpansion {
        SchurExpansion {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.len() <= n)
                .map(|(p, &c)| (p.clone(), c))
                .collect(),
        }
    }

    /// Terms from the largest partition down, as `[(λ, c)]`.
    pub fn descending(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.terms.iter().rev().map(|(p, &c)| (p, c))
    }

    /// `{"(2,1)": c, ...}`.
    pub fn to_json(&self) -> Value {
        Value::Object(
            self.descending()
                .map(|(p, c)| (p.to_string(), json!(c)))
                .collect(),
        )
    }

    pub fn monomial_expansion(&self, n: usize) -> MonomialPoly {
        let mut out = MonomialPoly::zero(n);
        for (p, c) in self.descending() {
            if p.len() <= n {
                out.add_scaled(&cached_schur(p, n), c);
            }
        }
        out
    }
}

/// `s_λ(x_1..x_n)` as the sum of content monomials of semistandard tableaux.
pub fn schur_monomial_expansion(lambda: &Partition, n: usize) -> Result<MonomialPoly> {
    if lambda.len() > n {
        return Err(Error::TooManyRows {
            partition: lambda.to_string(),
            n,
        });
    }
    let shape = lambda.parts();
    let heights = lambda.conjugate();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<u32>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut content = vec![0u32; n];
    let mut out = MonomialPoly::zero(n);
    fill_ssyt(
        &cells,
        0,
        &heights,
        n as u32,
        &mut grid,
        &mut content,
        &mut out,
    );
    Ok(out)
}

/// `s_λ(x_1..x_n)`, or zero with the flag set when `ℓ(λ) > n`.
pub fn schur_polynomial_or_zero(lambda: &Partition, n: usize) -> (MonomialPoly, bool) {
    match schur_monomial_expansion(lambda, n) {
        Ok(p) => (p, false),
        Err(_) => (MonomialPoly::zero(n), true),
    }
}

fn fill_ssyt(
    cells: &[(usize, usize)],
    idx: usize,
    heights: &Partition,
    n: u32,
    grid: &mut [Vec<u32>],
    content: &mut [u32],
    out: &mut MonomialPoly,
) {
    let Some(&(r, c)) = cells.get(idx) else {
        out.add_term(MultiIndex(content.to_vec()), 1);
        return;
    };
    let left = if c > 0 { grid[r][c - 1] } else { 1 };
    let above = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
    // room for the strictly increasing cells below in this column
    let hi = n - (heights.part(c) - 1 - r) as u32;
    for v in left.max(above)..=hi {
        grid[r][c] = v;
        content[v as usize - 1] += 1;
        fill_ssyt(cells, idx + 1, heights, n, grid, content, out);
        content[v as usize - 1] -= 1;
    }
}

fn cached_schur(lambda: &Partition, n: usize) -> Arc<MonomialPoly> {
    type Cache = Mutex<HashMap<(Partition, usize), Arc<MonomialPoly>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (lambda.clone(), n);
    if let Some(p) = cache.lock().expect("schur cache poisoned").get(&key) {
        return Arc::clone(p);
    }
    let built = Arc::new(schur_monomial_expansion(lambda, n).expect("caller checks row count"));
    Arc::clone(
        cache
            .lock()
            .expect("schur cache poisoned")
            .entry(key)
            .or_insert(built),
    )
}

/// Schur expansion of a symmetric polynomial by repeatedly removing the
/// lexicographically leading monomial `c·x^ν`, which forces the term `c·s_ν`.
pub fn schur_expand_symmetric(poly: &MonomialPoly) -> Result<SchurExpansion> {
    let mut rest = poly.clone();
    let mut out = SchurExpansion::new();
    while let Some((lead, &c)) = rest.terms.iter().next_back() {
        if !lead.0.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::NotDominant(lead.to_string()));
        }
        let nu = Partition::new(lead.0.iter().map(|&e| e as usize).collect());
        rest.add_scaled(&cached_schur(&nu, poly.n), -c);
        out.add_term(nu, c);
    }
    Ok(out)
}

/// `dim` of the `GL_n` module `s_λ` by the hook-content formula.
pub fn schur_dimension(lambda: &Partition, n: usize) -> u128 {
    if lambda.len() > n {
        return 0;
    }
    let hooks = crate::combel::hook_lengths(lambda);
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for (r, row) in hooks.iter().enumerate() {
        for (c, &h) in row.iter().enumerate() {
            num *= (n + c - r) as u128;
            den *= h as u128;
        }
    }
    num / den
}

/// Compares `lr_coefficients(λ, μ)` with the expansion of the product of
/// monomial expansions in `|λ| + |μ|` variables.
pub fn verify_lr_oracle(lambda: &Partition, mu: &Partition) -> Result<Verdict> {
    let n = (lambda.size() + mu.size()).max(1);
    let product = schur_monomial_expansion(lambda, n)?.mul(&schur_monomial_expansion(mu, n)?);
    let oracle = schur_expand_symmetric(&product)?;
    let lr = lr_coefficients(lambda, mu);
    let pass = oracle == lr && product.is_symmetric();
    Ok(Verdict::new(
        pass,
        json!({
            "lambda": lambda.to_string(),
            "mu": mu.to_string(),
            "variables": n,
            "lr": lr.to_json(),
            "oracle": oracle.to_json(),
        }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combel::partitions_of;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    fn poly(n: usize, terms: &[(&[u32], i64)]) -> MonomialPoly {
        let mut out = MonomialPoly::zero(n);
        for (e, c) in terms {
            out.add_term(MultiIndex(e.to_vec()), *c);
        }
        out
    }

    #[test]
    fn small_schur_polynomials() {
        assert_eq!(
            schur_monomial_expansion(&p(&[1]), 2).unwrap(),
            poly(2, &[(&[1, 0], 1), (&[0, 1], 1)])
        );
        assert_eq!(
            schur_monomial_expansion(&p(&[2]), 2).unwrap(),
            poly(2, &[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1)])
        );
        assert_eq!(
            schur_monomial_expansion(&p(&[1, 1]), 2).unwrap(),
            poly(2, &[(&[1, 1], 1)])
        );
        assert_eq!(
            schur_monomial_expansion(&Partition::empty(), 3).unwrap(),
            poly(3, &[(&[0, 0, 0], 1)])
        );
        // s_(2,1)(x1,x2,x3) = m_(2,1) + 2 m_(1,1,1)
        let s21 = schur_monomial_expansion(&p(&[2, 1]), 3).unwrap();
        assert_eq!(s21.coefficient(&MultiIndex(vec![1, 1, 1])), 2);
        assert_eq!(s21.coefficient(&MultiIndex(vec![0, 1, 2])), 1);
        assert_eq!(s21.terms.len(), 7);
    }

    #[test]
    fn too_many_rows() {
        assert!(matches!(
            schur_monomial_expansion(&p(&[1, 1, 1]), 2),
            Err(Error::TooManyRows { n: 2, .. })
        ));
        let (z, flagged) = schur_polynomial_or_zero(&p(&[1, 1, 1]), 2);
        assert!(z.is_zero() && flagged);
    }

    #[test]
    fn schur_polynomials_are_symmetric_with_hook_content_dimension() {
        for size in 0..=6 {
            for lambda in partitions_of(size) {
                for n in lambda.len().max(1)..=4 {
                    let s = schur_monomial_expansion(&lambda, n).unwrap();
                    assert!(s.is_symmetric(), "{lambda} in {n}");
                    assert_eq!(
                        s.eval_ones() as u128,
                        schur_dimension(&lambda, n),
                        "{lambda} in {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn leading_term_division_recovers_single_schur() {
        for lambda in partitions_of(5) {
            let s = schur_monomial_expansion(&lambda, 5).unwrap();
            assert_eq!(
                schur_expand_symmetric(&s).unwrap(),
                SchurExpansion::single(lambda)
            );
        }
        for terms in [&[(&[1u32, 0][..], 1i64)][..], &[(&[0, 1][..], 1)][..]] {
            assert!(matches!(
                schur_expand_symmetric(&poly(2, terms)),
                Err(Error::NotDominant(_))
            ));
        }
    }

    #[test]
    fn expansion_arithmetic() {
        let mut a = SchurExpansion::single(p(&[2]));
        a.add_term(p(&[1, 1]), 3);
        let b = SchurExpansion::single(p(&[2]));
        let d = a.sub(&b);
        assert_eq!(d.terms.len(), 1);
        assert_eq!(d.coefficient(&p(&[1, 1])), 3);
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.restrict_rows(1).terms.len(), 1);
        assert_eq!(a.to_json().to_string(), r#"{"(1,1)":3,"(2)":1}"#);
    }
}
