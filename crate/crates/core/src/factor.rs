//! Factorizations over a generating set and the order / min-order tables.

use std::fmt;

use crate::semigroup::{Generators, Semigroup};
use crate::{Error, Result};

/// Upper limit on the number of entries in a [`LengthTable`].
pub const MAX_TABLE_LEN: u64 = 1 << 27;

/// A coefficient vector aligned with some generating set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factorization {
    coefficients: Vec<u64>,
}

impl Factorization {
    pub fn new(coefficients: Vec<u64>) -> Self {
        Factorization { coefficients }
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    /// Sum of the coefficients.
    pub fn length(&self) -> u64 {
        self.coefficients.iter().sum()
    }

    /// The element this vector factors over `gens`.
    pub fn evaluate(&self, gens: &[u64]) -> u64 {
        self.coefficients.iter().zip(gens).map(|(c, g)| c * g).sum()
    }
}

impl From<Vec<u64>> for Factorization {
    fn from(coefficients: Vec<u64>) -> Self {
        Factorization::new(coefficients)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coefficients.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Calls `visit` with every factorization of `n` over `gens`.
///
/// Vectors arrive in lexicographically decreasing order where the
/// coefficient of the largest generator is most significant, then the next
/// largest, and so on. The slice passed to `visit` is positionally aligned
/// with `gens`.
pub fn for_each_factorization<F: FnMut(&[u64])>(gens: &[u64], n: u64, mut visit: F) {
    let mut order: Vec<usize> = (0..gens.len()).collect();
    order.sort_by(|&a, &b| gens[b].cmp(&gens[a]));
    let mut coeffs = vec![0u64; gens.len()];
    descend(gens, &order, 0, n, &mut coeffs, &mut visit);
}

fn descend<F: FnMut(&[u64])>(
    gens: &[u64],
    order: &[usize],
    depth: usize,
    remaining: u64,
    coeffs: &mut [u64],
    visit: &mut F,
) {
    let pos = order[depth];
    let g = gens[pos];
    if depth + 1 == order.len() {
        if remaining.is_multiple_of(g) {
            coeffs[pos] = remaining / g;
            visit(coeffs);
            coeffs[pos] = 0;
        }
        return;
    }
    for c in (0..=remaining / g).rev() {
        coeffs[pos] = c;
        descend(gens, order, depth + 1, remaining - c * g, coeffs, visit);
    }
    coeffs[pos] = 0;
}

/// All factorizations of `n`, in the order described on
/// [`for_each_factorization`]. Empty iff `n` is not representable.
pub fn enumerate_factorizations<G: Generators + ?Sized>(set: &G, n: u64) -> Vec<Factorization> {
    let mut out = Vec::new();
    for_each_factorization(set.generators(), n, |c| out.push(Factorization::new(c.to_vec())));
    out
}

/// Number of factorizations of `n` over the set.
pub fn denumerant<G: Generators + ?Sized>(set: &G, n: u64) -> u64 {
    let mut count = 0;
    for_each_factorization(set.generators(), n, |_| count += 1);
    count
}

/// Memoized maximal and minimal factorization lengths over `0..=limit`,
/// grown on demand.
///
/// `ord(n) = 1 + max ord(n - g)` and `minord(n) = 1 + min minord(n - g)`
/// over generators `g ≤ n` with `n - g` representable.
#[derive(Debug, Clone)]
pub struct LengthTable {
    gens: Vec<u64>,
    max_len: Vec<Option<u64>>,
    min_len: Vec<Option<u64>>,
}

impl LengthTable {
    pub fn new<G: Generators + ?Sized>(set: &G) -> Self {
        LengthTable {
            gens: set.generators().to_vec(),
            max_len: vec![Some(0)],
            min_len: vec![Some(0)],
        }
    }

    pub fn with_limit<G: Generators + ?Sized>(set: &G, limit: u64) -> Result<Self> {
        let mut table = LengthTable::new(set);
        table.extend_to(limit)?;
        Ok(table)
    }

    /// Largest `n` currently tabulated.
    pub fn limit(&self) -> u64 {
        self.max_len.len() as u64 - 1
    }

    pub fn extend_to(&mut self, limit: u64) -> Result<()> {
        if limit >= MAX_TABLE_LEN {
            return Err(Error::TooLarge(limit));
        }
        let target = limit as usize + 1;
        for n in self.max_len.len()..target {
            let mut best_max: Option<u64> = None;
            let mut best_min: Option<u64> = None;
            for &g in &self.gens {
                let g = g as usize;
                if g > n {
                    continue;
                }
                if let Some(l) = self.max_len[n - g] {
                    best_max = Some(best_max.map_or(l + 1, |b| b.max(l + 1)));
                }
                if let Some(l) = self.min_len[n - g] {
                    best_min = Some(best_min.map_or(l + 1, |b| b.min(l + 1)));
                }
            }
            self.max_len.push(best_max);
            self.min_len.push(best_min);
        }
        Ok(())
    }

    /// Maximal length of a factorization of `n`, growing the table as needed.
    pub fn order(&mut self, n: u64) -> Result<u64> {
        self.extend_to(n)?;
        self.cached_order(n)
    }

    /// Minimal length of a factorization of `n`, growing the table as needed.
    pub fn min_order(&mut self, n: u64) -> Result<u64> {
        self.extend_to(n)?;
        self.cached_min_order(n)
    }

    /// Read-only lookup; `n` must not exceed [`LengthTable::limit`].
    pub fn cached_order(&self, n: u64) -> Result<u64> {
        assert!(n <= self.limit(), "order table queried past its limit");
        self.max_len[n as usize].ok_or(Error::NotRepresentable(n))
    }

    /// Read-only lookup; `n` must not exceed [`LengthTable::limit`].
    pub fn cached_min_order(&self, n: u64) -> Result<u64> {
        assert!(n <= self.limit(), "order table queried past its limit");
        self.min_len[n as usize].ok_or(Error::NotRepresentable(n))
    }

    pub fn generators(&self) -> &[u64] {
        &self.gens
    }
}

pub fn order<G: Generators + ?Sized>(set: &G, n: u64) -> Result<u64> {
    LengthTable::new(set).order(n)
}

pub fn min_order<G: Generators + ?Sized>(set: &G, n: u64) -> Result<u64> {
    LengthTable::new(set).min_order(n)
}

/// Number of factorizations of `s` attaining the maximal length.
pub fn max_dnum_element(semigroup: &Semigroup, s: u64) -> Result<u64> {
    if !semigroup.contains_u(s) {
        return Err(Error::NotAMember(s as i64));
    }
    let ord = order(semigroup, s)?;
    Ok(count_with_length(semigroup.generators(), s, |len| len == ord))
}

pub(crate) fn count_with_length<P: Fn(u64) -> bool>(gens: &[u64], n: u64, keep: P) -> u64 {
    let mut count = 0;
    for_each_factorization(gens, n, |c| {
        if keep(c.iter().sum()) {
            count += 1;
        }
    });
    count
}
