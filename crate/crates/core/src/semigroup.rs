//! Numerical semigroups, generating sets and Apéry sets.

use std::fmt;

use crate::arith::gcd_all;
use crate::{Error, Result};

/// Largest generator accepted anywhere in the crate. Apéry elements are
/// bounded by `(e - 1) * max_generator`, so this keeps every intermediate
/// sum comfortably inside `u64`.
pub const MAX_GENERATOR: u64 = 1 << 24;

/// Anything that carries an ordered list of generators.
pub trait Generators {
    fn generators(&self) -> &[u64];
}

/// An ordered generating set that is not required to be minimal or sorted.
///
/// Coefficient vectors of [`crate::Factorization`]s over this set follow the
/// order given at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratingSet {
    elements: Vec<u64>,
}

impl GeneratingSet {
    pub fn new(elements: Vec<u64>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::EmptyInput);
        }
        for (idx, &g) in elements.iter().enumerate() {
            if g == 0 {
                return Err(Error::NonPositiveEntry(0));
            }
            if g > MAX_GENERATOR {
                return Err(Error::TooLarge(g));
            }
            if elements[..idx].contains(&g) {
                return Err(Error::DuplicateEntry(g));
            }
        }
        Ok(GeneratingSet { elements })
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn gcd(&self) -> u64 {
        gcd_all(&self.elements)
    }
}

impl Generators for GeneratingSet {
    fn generators(&self) -> &[u64] {
        &self.elements
    }
}

impl fmt::Display for GeneratingSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", join(&self.elements))
    }
}

/// A numerical semigroup given by its minimal generators.
///
/// The Apéry set with respect to the multiplicity is computed once at
/// construction and backs every membership query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Semigroup {
    generators: Vec<u64>,
    apery: Vec<u64>,
}

impl Semigroup {
    /// Builds the semigroup generated by `raw`, reducing the list to the
    /// minimal generating set.
    pub fn new(raw: &[u64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(&g) = raw.iter().find(|&&g| g == 0) {
            return Err(Error::NonPositiveEntry(g as i64));
        }
        if let Some(&g) = raw.iter().find(|&&g| g > MAX_GENERATOR) {
            return Err(Error::TooLarge(g));
        }
        let gcd = gcd_all(raw);
        if gcd != 1 {
            return Err(Error::GcdNotOne(gcd));
        }

        let mut sorted = raw.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut generators: Vec<u64> = Vec::with_capacity(sorted.len());
        for g in sorted {
            if !representable(g, &generators) {
                generators.push(g);
            }
        }

        let apery = least_by_residue(&generators, generators[0]);
        Ok(Semigroup { generators, apery })
    }

    /// The semigroup of all nonnegative integers, `⟨1⟩`.
    pub fn natural() -> Self {
        Semigroup {
            generators: vec![1],
            apery: vec![0],
        }
    }

    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn is_natural(&self) -> bool {
        self.generators[0] == 1
    }

    /// `Ap(S; e)` indexed by residue class modulo the multiplicity.
    pub fn apery_by_class(&self) -> &[u64] {
        &self.apery
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        let n = n as u64;
        n >= self.apery[(n % self.multiplicity()) as usize]
    }

    pub fn contains_u(&self, n: u64) -> bool {
        n >= self.apery[(n % self.multiplicity()) as usize]
    }

    /// `a ⪯ b`, i.e. `b - a ∈ S`.
    pub fn precedes(&self, a: u64, b: u64) -> bool {
        b >= a && self.contains_u(b - a)
    }

    /// Largest integer not in `S`; `-1` for the naturals.
    pub fn frobenius(&self) -> i64 {
        let max = *self.apery.iter().max().expect("apery set is never empty");
        max as i64 - self.multiplicity() as i64
    }

    /// `Ap(S; u) = {w ∈ S : w - u ∉ S}`, sorted increasing.
    pub fn apery(&self, u: u64) -> Result<AperySet> {
        if u == 0 || !self.contains_u(u) {
            return Err(Error::NotAMember(u as i64));
        }
        let elements = if u == self.multiplicity() {
            let mut v = self.apery.clone();
            v.sort_unstable();
            v
        } else {
            let mut v: Vec<u64> = (0..u)
                .map(|r| {
                    let mut n = r;
                    while !self.contains_u(n) {
                        n += u;
                    }
                    n
                })
                .collect();
            v.sort_unstable();
            v
        };
        Ok(AperySet { base: u, elements })
    }

    /// Elements of `Ap(S; u) ∖ {0}` that are maximal with respect to `⪯`.
    pub fn max_apery(&self, u: u64) -> Result<Vec<u64>> {
        let ap = self.apery(u)?;
        let maximal = ap
            .elements
            .iter()
            .copied()
            .filter(|&w| w != 0)
            .filter(|&w| {
                !ap.elements
                    .iter()
                    .any(|&other| other != w && self.precedes(w, other))
            })
            .collect();
        Ok(maximal)
    }
}

impl Generators for Semigroup {
    fn generators(&self) -> &[u64] {
        &self.generators
    }
}

impl fmt::Display for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", join(&self.generators))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperySet {
    pub base: u64,
    pub elements: Vec<u64>,
}

/// Least element of the monoid generated by `gens` in each residue class
/// modulo `modulus`, by fixpoint relaxation from class 0.
///
/// Classes that the monoid never reaches stay `u64::MAX`; callers that need
/// every class populated must pass generators with gcd 1.
pub fn least_by_residue(gens: &[u64], modulus: u64) -> Vec<u64> {
    let m = modulus as usize;
    let mut least = vec![u64::MAX; m];
    least[0] = 0;
    let mut changed = true;
    while changed {
        changed = false;
        for r in 0..m {
            let w = least[r];
            if w == u64::MAX {
                continue;
            }
            for &g in gens {
                let next = w + g;
                let class = (next % modulus) as usize;
                if next < least[class] {
                    least[class] = next;
                    changed = true;
                }
            }
        }
    }
    least
}

/// Whether `n` is a nonnegative combination of `gens` (bounded reachability).
fn representable(n: u64, gens: &[u64]) -> bool {
    if gens.is_empty() {
        return false;
    }
    let n = n as usize;
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for k in 1..=n {
        reach[k] = gens
            .iter()
            .any(|&g| (g as usize) <= k && reach[k - g as usize]);
    }
    reach[n]
}

pub(crate) fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}
