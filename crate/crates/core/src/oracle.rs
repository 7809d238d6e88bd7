//! Brute-force ground truth.
//!
//! Nothing here touches the Apéry tables, the order DP or the blowup engine:
//! membership is "has a factorization", order is the longest enumerated
//! factorization, and everything is found by plain recursion over the
//! coefficient vectors. It is slow on purpose.

use crate::semigroup::{Generators, Semigroup};
use crate::{Error, Factorization, Result};

/// How far [`oracle_dmax`] scans.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleBound {
    pub max_element: u64,
    pub rationale: String,
}

impl OracleBound {
    /// `e·(1 + max ord(f; B^𝒟)) + max f` over the least element `f` of each
    /// residue class of the blowup. Every element of the form `u + r·e`
    /// that realises an R-set lies below `f + minord(f)·e` for its class.
    pub fn auto(s: &Semigroup) -> Self {
        let gens = s.generators();
        let e = gens[0];
        let dset: Vec<u64> = std::iter::once(e)
            .chain(gens[1..].iter().map(|&a| a - e))
            .collect();
        let mut max_f = 0;
        let mut max_ord = 0;
        for class in 0..e {
            let mut b = class;
            while !naive_member(&dset, b) {
                b += e;
            }
            let mut ord = 0;
            visit(&dset, b, &mut |c| ord = ord.max(c.iter().sum()));
            max_f = max_f.max(b);
            max_ord = max_ord.max(ord);
        }
        OracleBound {
            max_element: e * (1 + max_ord) + max_f,
            rationale: format!("auto: e = {e}, max f = {max_f}, max ord(f) = {max_ord}"),
        }
    }

    pub fn fixed(max_element: u64) -> Self {
        OracleBound {
            max_element,
            rationale: "fixed".into(),
        }
    }
}

/// Every coefficient vector `c ≥ 0` with `Σ c_k g_k = n`, visited by nested
/// recursion from the last position to the first.
fn visit<F: FnMut(&[u64])>(gens: &[u64], n: u64, f: &mut F) {
    fn go<F: FnMut(&[u64])>(gens: &[u64], pos: usize, rest: u64, c: &mut Vec<u64>, f: &mut F) {
        if pos == 0 {
            if rest.is_multiple_of(gens[0]) {
                c[0] = rest / gens[0];
                f(c);
            }
            return;
        }
        let g = gens[pos];
        let mut k = 0;
        while k * g <= rest {
            c[pos] = k;
            go(gens, pos - 1, rest - k * g, c, f);
            k += 1;
        }
        c[pos] = 0;
    }
    let mut c = vec![0; gens.len()];
    go(gens, gens.len() - 1, n, &mut c, f);
}

fn naive_member(gens: &[u64], n: u64) -> bool {
    fn go(gens: &[u64], rest: u64) -> bool {
        match gens.split_last() {
            None => rest == 0,
            Some((&g, init)) => (0..=rest / g).any(|k| go(init, rest - k * g)),
        }
    }
    go(gens, n)
}

/// All factorizations of `n`, sorted with the coefficient of the largest
/// generator most significant, descending.
pub fn oracle_factorizations(gens: &[u64], n: u64) -> Vec<Factorization> {
    let mut out: Vec<Vec<u64>> = Vec::new();
    visit(gens, n, &mut |c| out.push(c.to_vec()));
    let mut by_size: Vec<usize> = (0..gens.len()).collect();
    by_size.sort_by_key(|&k| std::cmp::Reverse(gens[k]));
    out.sort_by_cached_key(|c| std::cmp::Reverse(by_size.iter().map(|&k| c[k]).collect::<Vec<_>>()));
    out.into_iter().map(Factorization::new).collect()
}

/// `(maximal length, number of factorizations attaining it)`, or `None` if
/// `n` has no factorization.
fn max_length_count(gens: &[u64], n: u64) -> Option<(u64, u64)> {
    let mut best: Option<(u64, u64)> = None;
    visit(gens, n, &mut |c| {
        let len: u64 = c.iter().sum();
        best = match best {
            Some((l, k)) if l == len => Some((l, k + 1)),
            Some((l, k)) if l > len => Some((l, k)),
            _ => Some((len, 1)),
        };
    });
    best
}

/// Maximal-length factorization count of `s`, straight from the definition.
pub fn oracle_dmax_element(s: &Semigroup, n: u64) -> Result<u64> {
    max_length_count(s.generators(), n)
        .map(|(_, count)| count)
        .ok_or(Error::NotAMember(n as i64))
}

/// Maximal denumerant of every `n ≤ limit`; `None` for non-members.
pub fn oracle_element_table(s: &Semigroup, limit: u64) -> Vec<Option<u64>> {
    (0..=limit)
        .map(|n| max_length_count(s.generators(), n).map(|(_, c)| c))
        .collect()
}

fn checked_bound(s: &Semigroup, bound: &OracleBound) -> Result<()> {
    let required = OracleBound::auto(s).max_element;
    if bound.max_element < required {
        return Err(Error::BoundTooSmall {
            given: bound.max_element,
            required,
        });
    }
    Ok(())
}

/// Largest maximal denumerant over `n ≤ bound.max_element`.
pub fn oracle_dmax(s: &Semigroup, bound: &OracleBound) -> Result<u64> {
    checked_bound(s, bound)?;
    Ok(scan_max(s, 0, bound.max_element, |_| true))
}

/// As [`oracle_dmax`], restricted to elements congruent to `residue`
/// modulo the multiplicity.
pub fn oracle_dmax_residue(s: &Semigroup, bound: &OracleBound, residue: u64) -> Result<u64> {
    checked_bound(s, bound)?;
    let e = s.generators()[0];
    if residue >= e {
        return Err(Error::InvalidResidue {
            residue,
            multiplicity: e,
        });
    }
    Ok(scan_max(s, 0, bound.max_element, |n| n % e == residue))
}

fn scan_max<P: Fn(u64) -> bool>(s: &Semigroup, from: u64, to: u64, keep: P) -> u64 {
    (from..=to)
        .filter(|&n| keep(n))
        .filter_map(|n| max_length_count(s.generators(), n).map(|(_, c)| c))
        .max()
        .unwrap_or(0)
}

/// Doubles the scan ceiling, starting from the largest generator, until the
/// answer is unchanged across two consecutive doublings. Returns the value
/// and the final ceiling.
pub fn oracle_dmax_empirical(s: &Semigroup) -> (u64, OracleBound) {
    let start = *s.generators().last().expect("nonempty");
    let mut bound = start;
    let mut history = vec![scan_max(s, 0, bound, |_| true)];
    loop {
        let next = bound * 2;
        let best = history.last().copied().unwrap().max(scan_max(s, bound + 1, next, |_| true));
        history.push(best);
        bound = next;
        if let [.., a, b, c] = history[..] {
            if a == b && b == c {
                return (
                    c,
                    OracleBound {
                        max_element: bound,
                        rationale: format!("empirical: stable from {}", bound / 4),
                    },
                );
            }
        }
    }
}
