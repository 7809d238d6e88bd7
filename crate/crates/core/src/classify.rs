//! Structural predicates and closed-form shortcuts.
//!
//! Every function here has a general-engine counterpart; the shortcuts only
//! apply under their stated preconditions and are cross-checked against
//! [`crate::engine::dmax`] in the test suites.

use num_integer::Integer;

use crate::arith::{bezout, ceil_div, gcd_all};
use crate::engine::{adjustment_tables, BlowupContext};
use crate::factor::{denumerant, LengthTable};
use crate::semigroup::{Generators, Semigroup};
use crate::{Error, Result};

/// `S = ⟨e, e+d, …, e+t·d⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArithmeticSequence {
    pub e: u64,
    pub d: u64,
    pub t: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub additive: bool,
    pub blowup_symmetric: bool,
    pub supersymmetric: bool,
    pub arithmetic_sequence: Option<ArithmeticSequence>,
}

pub fn classify(s: &Semigroup) -> Result<Classification> {
    let ctx = BlowupContext::new(s);
    Ok(Classification {
        additive: additive_in(&ctx)?,
        blowup_symmetric: is_symmetric(ctx.blowup())?,
        supersymmetric: is_supersymmetric(s)?,
        arithmetic_sequence: arithmetic_sequence(s),
    })
}

fn additive_in(ctx: &BlowupContext) -> Result<bool> {
    Ok(adjustment_tables(ctx)?.iter().all(|t| t.entries.len() == 1))
}

/// `adj(S_i) = {f_i}` for every residue class.
pub fn is_additive(s: &Semigroup) -> Result<bool> {
    additive_in(&BlowupContext::new(s))
}

/// Additivity straight from the definition `ord(u + e) = ord(u) + 1`,
/// checked for all `u ∈ S` up to the point where every residue class has
/// settled (`max f_i + ord(f_i; B^𝒟)·e`, at least `F(S) + e`).
pub fn is_additive_by_orders(s: &Semigroup) -> Result<bool> {
    let ctx = BlowupContext::new(s);
    let e = s.multiplicity();
    let mut dtable = LengthTable::new(ctx.dset());
    let mut bound = (s.frobenius() + e as i64).max(0) as u64;
    for &f in ctx.blowup_apery_by_class() {
        bound = bound.max(f + dtable.order(f)? * e);
    }
    let mut table = LengthTable::with_limit(s, bound + e)?;
    for u in (0..=bound).filter(|&u| s.contains_u(u)) {
        if table.order(u + e)? != table.order(u)? + 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The two symmetry characterizations evaluated independently:
/// `(w_i + w_j = w_{e-1} whenever i + j = e - 1, maxAp(S; e) = {F(S) + e})`.
pub fn symmetry_conditions(s: &Semigroup) -> (bool, bool) {
    let e = s.multiplicity();
    let w = s.apery(e).expect("multiplicity is an element").elements;
    let last = w.len() - 1;
    let pairing = (0..=last).all(|i| w[i] + w[last - i] == w[last]);

    let top = s.frobenius() + e as i64;
    let maximal = s.max_apery(e).expect("multiplicity is an element");
    // Ap(ℕ; 1) \ {0} is empty, where F + e = 0 plays the role of the top.
    let unique_max = match maximal.as_slice() {
        [] => top == 0,
        [m] => *m as i64 == top,
        _ => false,
    };
    (pairing, unique_max)
}

pub fn is_symmetric(s: &Semigroup) -> Result<bool> {
    match symmetry_conditions(s) {
        (a, b) if a == b => Ok(a),
        (a, b) => Err(Error::Inconsistent(format!(
            "symmetry characterizations disagree on {s}: pairing {a}, unique maximum {b}"
        ))),
    }
}

/// Additive, and the Apéry set of `e` pairs up both in value and in order.
pub fn is_supersymmetric(s: &Semigroup) -> Result<bool> {
    if !is_additive(s)? {
        return Ok(false);
    }
    let e = s.multiplicity();
    let w = s.apery(e)?.elements;
    let last = w.len() - 1;
    let mut table = LengthTable::with_limit(s, w[last])?;
    for i in 0..=last {
        let j = last - i;
        if w[i] + w[j] != w[last] {
            return Ok(false);
        }
        if table.order(w[i])? + table.order(w[j])? != table.order(w[last])? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Detects `⟨e, e+d, …, e+t·d⟩` with `d = a_1 - e`.
pub fn arithmetic_sequence(s: &Semigroup) -> Option<ArithmeticSequence> {
    let gens = s.generators();
    if gens.len() < 2 {
        return None;
    }
    let e = gens[0];
    let d = gens[1] - e;
    let matches = gens
        .iter()
        .enumerate()
        .all(|(k, &a)| a == e + k as u64 * d);
    matches.then_some(ArithmeticSequence {
        e,
        d,
        t: gens.len() as u64 - 1,
    })
}

/// Largest `d(f; B^𝒟)` over the maximal elements of `Ap(B; e)`.
pub fn dmax_additive(s: &Semigroup) -> Result<u64> {
    let ctx = BlowupContext::new(s);
    if !additive_in(&ctx)? {
        return Err(Error::NotAdditive);
    }
    let maximal = ctx.blowup().max_apery(s.multiplicity())?;
    Ok(maximal
        .into_iter()
        .map(|f| denumerant(ctx.dset(), f))
        .max()
        .unwrap_or(1))
}

/// `d(F(B) + e; B^𝒟)` for additive `S` with symmetric blowup.
pub fn dmax_symmetric_blowup(s: &Semigroup) -> Result<u64> {
    let ctx = BlowupContext::new(s);
    if !additive_in(&ctx)? {
        return Err(Error::PreconditionFailed("semigroup is not additive".into()));
    }
    if !is_symmetric(ctx.blowup())? {
        return Err(Error::PreconditionFailed("blowup is not symmetric".into()));
    }
    let top = ctx.blowup().frobenius() + s.multiplicity() as i64;
    Ok(denumerant(ctx.dset(), top as u64))
}

/// Maximal denumerant of `⟨e, e+d, …, e+t·d⟩`: partitions of `e - 1` into
/// parts of size at most `t`.
pub fn dmax_arithmetic(e: u64, d: u64, t: u64) -> Result<u64> {
    if t < 1 || d < 1 || e <= t {
        return Err(Error::InvalidParameters(format!(
            "need d ≥ 1 and 1 ≤ t < e, got e = {e}, d = {d}, t = {t}"
        )));
    }
    if e.gcd(&d) != 1 {
        return Err(Error::InvalidParameters(format!("gcd({e}, {d}) ≠ 1")));
    }
    Ok(partition_count(e - 1, t))
}

/// Partitions of `n` into parts from `1..=max_part`.
pub fn partition_count(n: u64, max_part: u64) -> u64 {
    let n = n as usize;
    let mut ways = vec![0u64; n + 1];
    ways[0] = 1;
    for part in 1..=(max_part as usize).min(n) {
        for x in part..=n {
            ways[x] = ways[x]
                .checked_add(ways[x - part])
                .expect("partition count overflows u64");
        }
    }
    ways[n]
}

/// A triple `a1 < a2 < a3` with gcd 1, rewritten as `⟨a1, a1 + g·m, a1 + g·n⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ed3Input {
    pub a1: u64,
    pub a2: u64,
    pub a3: u64,
    pub g: u64,
    pub m: u64,
    pub n: u64,
    /// `0 ≤ α < m·n`, `α ≡ -a1 (mod m·n)`.
    pub alpha: u64,
}

impl Ed3Input {
    pub fn new(a1: u64, a2: u64, a3: u64) -> Result<Self> {
        if !(1 <= a1 && a1 < a2 && a2 < a3) {
            return Err(Error::InvalidParameters(format!(
                "need 1 ≤ a1 < a2 < a3, got ({a1}, {a2}, {a3})"
            )));
        }
        if a3 > crate::semigroup::MAX_GENERATOR {
            return Err(Error::TooLarge(a3));
        }
        let gcd = gcd_all(&[a1, a2, a3]);
        if gcd != 1 {
            return Err(Error::GcdNotOne(gcd));
        }
        let g = (a2 - a1).gcd(&(a3 - a1));
        let m = (a2 - a1) / g;
        let n = (a3 - a1) / g;
        let mn = m * n;
        let alpha = (mn - a1 % mn) % mn;
        Ok(Ed3Input {
            a1,
            a2,
            a3,
            g,
            m,
            n,
            alpha,
        })
    }

    pub fn from_semigroup(s: &Semigroup) -> Result<Self> {
        match *s.generators() {
            [a1, a2, a3] => Ed3Input::new(a1, a2, a3),
            _ => Err(Error::PreconditionFailed(format!(
                "embedding dimension is {}, not 3",
                s.embedding_dimension()
            ))),
        }
    }

    /// One solution of `m·x + n·y = a1`.
    pub fn bezout_solution(&self) -> (i64, i64) {
        let (x0, y0) = bezout(self.m as i64, self.n as i64);
        (x0 * self.a1 as i64, y0 * self.a1 as i64)
    }

    /// `⌈x/n⌉ + ⌈y/m⌉` for an arbitrary pair `(x, y)`.
    pub fn bezout_value(&self, x: i64, y: i64) -> i64 {
        ceil_div(x, self.n as i64) + ceil_div(y, self.m as i64)
    }
}

/// `⌈a1/(mn)⌉`, plus one when `α ∉ ⟨m, n⟩`.
pub fn dmax_ed3_ceiling(input: &Ed3Input) -> Result<u64> {
    let mn = input.m * input.n;
    let base = ceil_div(input.a1 as i64, mn as i64) as u64;
    let two_gen = Semigroup::new(&[input.m, input.n])?;
    Ok(if two_gen.contains_u(input.alpha) {
        base
    } else {
        base + 1
    })
}

/// `⌈x/n⌉ + ⌈y/m⌉` for integers with `m·x + n·y = a1`.
pub fn dmax_ed3_bezout(input: &Ed3Input) -> Result<u64> {
    let (x, y) = input.bezout_solution();
    let v = input.bezout_value(x, y);
    u64::try_from(v).map_err(|_| Error::Inconsistent(format!("negative Bézout value {v}")))
}
