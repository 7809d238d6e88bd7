//! The general maximal-denumerant algorithm.
//!
//! For `S = ⟨e, a_1, …, a_t⟩` let `𝒟 = (e, a_1 - e, …, a_t - e)` generate the
//! blowup `B`. Every maximal `S`-factorization of `s` corresponds to a
//! `𝒟`-factorization of the adjustment `adj(s) = s - ord(s)·e` with length at
//! most `ord(s)`. Within a residue class `S_i` the adjustment is
//! nonincreasing in `s` and settles on `f_i`, the element of `Ap(B; e)` in
//! class `i`, once `s ≥ f_i + minord(f_i)·e`. So `adj(S_i)` is a finite set
//! `u_0 < u_1 < …`, and the maximal denumerant over `S_i` is the largest of
//! the R-sets
//!
//! ```text
//! R(u_0) = all 𝒟-factorizations of u_0
//! R(u_j) = { x : |x| < minord(u_{j-1}) - (u_j - u_{j-1}) / e },  j > 0
//! ```
//!
//! Each R-set is realised by the element `u_j + r·e`, `r` the longest length
//! in `R(u_j)`.

use std::thread;

use crate::factor::{count_with_length, enumerate_factorizations, Factorization, LengthTable};
use crate::semigroup::{least_by_residue, GeneratingSet, Generators, Semigroup};
use crate::{Error, Result};

/// `S` together with its blowup and the distinguished generating set `𝒟`.
#[derive(Debug, Clone)]
pub struct BlowupContext {
    source: Semigroup,
    dset: GeneratingSet,
    blowup: Semigroup,
    blowup_apery: Vec<u64>,
}

impl BlowupContext {
    pub fn new(source: &Semigroup) -> Self {
        let e = source.multiplicity();
        let gens = source.generators();
        let mut d = Vec::with_capacity(gens.len());
        d.push(e);
        d.extend(gens[1..].iter().map(|&a| a - e));
        // a_i - e are distinct, and a_i ≠ 2e by minimality, so 𝒟 has no repeats.
        let dset = GeneratingSet::new(d).expect("blowup generating set is valid");
        let blowup = Semigroup::new(dset.elements()).expect("blowup generators have gcd 1");
        let blowup_apery = least_by_residue(dset.elements(), e);
        BlowupContext {
            source: source.clone(),
            dset,
            blowup,
            blowup_apery,
        }
    }

    pub fn source(&self) -> &Semigroup {
        &self.source
    }

    /// `𝒟 = (e, a_1 - e, …, a_t - e)`, in source generator order.
    pub fn dset(&self) -> &GeneratingSet {
        &self.dset
    }

    /// `B` with its own minimal generators.
    pub fn blowup(&self) -> &Semigroup {
        &self.blowup
    }

    pub fn multiplicity(&self) -> u64 {
        self.source.multiplicity()
    }

    /// `f_i`, the least element of `B` congruent to `i` modulo `e(S)`.
    pub fn blowup_apery_by_class(&self) -> &[u64] {
        &self.blowup_apery
    }

    fn check_residue(&self, residue: u64) -> Result<()> {
        let e = self.multiplicity();
        if residue >= e {
            return Err(Error::InvalidResidue {
                residue,
                multiplicity: e,
            });
        }
        Ok(())
    }
}

pub fn blowup(source: &Semigroup) -> BlowupContext {
    BlowupContext::new(source)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanRow {
    pub s: u64,
    pub order: u64,
    pub adj: u64,
}

/// An element `u ∈ adj(S_i)` with `minord(u; B^𝒟)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdjEntry {
    pub u: u64,
    pub min_order: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjustmentTable {
    pub residue: u64,
    /// `adj(S_i)` in increasing order; `entries[0].u == f_i`.
    pub entries: Vec<AdjEntry>,
    /// `(s, ord(s), adj(s))` from `min(S_i)` up to `f_i + minord(f_i)·e`.
    pub scan_log: Vec<ScanRow>,
}

impl AdjustmentTable {
    pub fn adjusted_elements(&self) -> Vec<u64> {
        self.entries.iter().map(|e| e.u).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RSet {
    pub u: u64,
    pub min_order: u64,
    /// Strict length bound applied to `𝒫(u)`; `None` for `u_0`.
    pub length_bound: Option<i64>,
    pub factorizations: Vec<Factorization>,
    /// `u + r·e` with `r` the longest length in the set.
    pub witness: u64,
}

impl RSet {
    pub fn len(&self) -> usize {
        self.factorizations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factorizations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueReport {
    pub residue: u64,
    pub rsets: Vec<RSet>,
    pub dmax_si: u64,
    /// Element of `S_i` attaining `dmax_si`: smallest `u_j` among the
    /// maximizing R-sets.
    pub witness: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DmaxReport {
    pub value: u64,
    pub per_residue: Vec<ResidueReport>,
}

/// Order tables for `S` and for `B^𝒟`, pre-grown so that residue sweeps can
/// share them read-only.
struct Tables {
    source: LengthTable,
    dset: LengthTable,
}

impl Tables {
    fn for_residues(ctx: &BlowupContext, residues: &[u64]) -> Result<Self> {
        let e = ctx.multiplicity();
        let min_s = ctx.source.apery_by_class();
        let f = ctx.blowup_apery_by_class();

        let mut dset = LengthTable::new(ctx.dset());
        let d_limit = residues
            .iter()
            .map(|&i| f[i as usize].max(min_s[i as usize]))
            .max()
            .unwrap_or(0);
        dset.extend_to(d_limit)?;

        let mut s_limit = 0;
        for &i in residues {
            s_limit = s_limit.max(stop_point(&dset, f[i as usize], e)?);
        }
        let source = LengthTable::with_limit(&ctx.source, s_limit)?;
        Ok(Tables { source, dset })
    }
}

/// `f + minord(f; B^𝒟)·e`, past which `adj` is constantly `f`.
fn stop_point(dset: &LengthTable, f: u64, e: u64) -> Result<u64> {
    let m = dset.cached_min_order(f)?;
    m.checked_mul(e)
        .and_then(|v| v.checked_add(f))
        .ok_or(Error::TooLarge(f))
}

/// Scans `S_i` from its least element to the stabilization point.
pub fn adjustment_table(ctx: &BlowupContext, residue: u64) -> Result<AdjustmentTable> {
    ctx.check_residue(residue)?;
    let tables = Tables::for_residues(ctx, &[residue])?;
    scan_residue(ctx, &tables, residue)
}

/// Adjustment tables for every residue class `0..e`.
pub fn adjustment_tables(ctx: &BlowupContext) -> Result<Vec<AdjustmentTable>> {
    let residues: Vec<u64> = (0..ctx.multiplicity()).collect();
    let tables = Tables::for_residues(ctx, &residues)?;
    residues
        .into_iter()
        .map(|i| scan_residue(ctx, &tables, i))
        .collect()
}

fn scan_residue(ctx: &BlowupContext, tables: &Tables, residue: u64) -> Result<AdjustmentTable> {
    let e = ctx.multiplicity();
    let f = ctx.blowup_apery_by_class()[residue as usize];
    let start = ctx.source.apery_by_class()[residue as usize];
    let stop = stop_point(&tables.dset, f, e)?;
    if start > stop {
        return Err(Error::Inconsistent(format!(
            "least element {start} of S_{residue} lies past the stop point {stop}"
        )));
    }

    let mut scan_log = Vec::new();
    let mut s = start;
    while s <= stop {
        let order = tables.source.cached_order(s)?;
        let adj = s - order * e;
        scan_log.push(ScanRow { s, order, adj });
        s += e;
    }

    let mut adjusted: Vec<u64> = scan_log.iter().map(|row| row.adj).collect();
    adjusted.sort_unstable();
    adjusted.dedup();
    let entries = adjusted
        .into_iter()
        .map(|u| {
            Ok(AdjEntry {
                u,
                min_order: tables.dset.cached_min_order(u)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    if entries.first().map(|x| x.u) != Some(f) {
        return Err(Error::Inconsistent(format!(
            "adj(S_{residue}) does not start at f_{residue} = {f}"
        )));
    }
    Ok(AdjustmentTable {
        residue,
        entries,
        scan_log,
    })
}

/// Computes the R-sets of one residue class and its maximal denumerant.
pub fn r_sets(ctx: &BlowupContext, table: &AdjustmentTable) -> Result<ResidueReport> {
    let e = ctx.multiplicity();
    let mut rsets: Vec<RSet> = Vec::with_capacity(table.entries.len());
    for (j, entry) in table.entries.iter().enumerate() {
        let length_bound = match j {
            0 => None,
            _ => {
                let prev = table.entries[j - 1];
                let gap = entry.u - prev.u;
                if !gap.is_multiple_of(e) {
                    return Err(Error::Inconsistent(format!(
                        "adjusted elements {} and {} are not congruent mod {e}",
                        prev.u, entry.u
                    )));
                }
                Some(prev.min_order as i64 - (gap / e) as i64)
            }
        };
        let factorizations: Vec<Factorization> = enumerate_factorizations(ctx.dset(), entry.u)
            .into_iter()
            .filter(|x| length_bound.is_none_or(|b| (x.length() as i64) < b))
            .collect();
        let longest = factorizations
            .iter()
            .map(Factorization::length)
            .max()
            .ok_or_else(|| {
                Error::Inconsistent(format!(
                    "R({}) is empty in residue class {}",
                    entry.u, table.residue
                ))
            })?;
        rsets.push(RSet {
            u: entry.u,
            min_order: entry.min_order,
            length_bound,
            factorizations,
            witness: entry.u + longest * e,
        });
    }

    // First maximum wins, i.e. smallest u_j.
    let best = rsets
        .iter()
        .fold(None::<&RSet>, |acc, r| match acc {
            Some(a) if a.len() >= r.len() => Some(a),
            _ => Some(r),
        })
        .expect("adj(S_i) is never empty");
    Ok(ResidueReport {
        residue: table.residue,
        dmax_si: best.len() as u64,
        witness: best.witness,
        rsets,
    })
}

/// Report for a single residue class.
pub fn residue_report(ctx: &BlowupContext, residue: u64) -> Result<ResidueReport> {
    let table = adjustment_table(ctx, residue)?;
    r_sets(ctx, &table)
}

/// Maximal denumerant of `S` with every residue report.
pub fn dmax(semigroup: &Semigroup) -> Result<DmaxReport> {
    dmax_with_workers(semigroup, 1)
}

/// As [`dmax`], sweeping residue classes on up to `workers` threads.
/// The result does not depend on `workers`.
pub fn dmax_with_workers(semigroup: &Semigroup, workers: usize) -> Result<DmaxReport> {
    let ctx = BlowupContext::new(semigroup);
    let e = ctx.multiplicity();
    let residues: Vec<u64> = (0..e).collect();
    let tables = Tables::for_residues(&ctx, &residues)?;

    let sweep = |i: u64| scan_residue(&ctx, &tables, i).and_then(|t| r_sets(&ctx, &t));
    let workers = workers.clamp(1, residues.len());
    let per_residue: Vec<ResidueReport> = if workers == 1 {
        residues.iter().map(|&i| sweep(i)).collect::<Result<_>>()?
    } else {
        let mut slots: Vec<Option<Result<ResidueReport>>> = vec![None; residues.len()];
        thread::scope(|scope| {
            let sweep = &sweep;
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    scope.spawn(move || {
                        (w as u64..e)
                            .step_by(workers)
                            .map(|i| (i, sweep(i)))
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            for handle in handles {
                for (i, report) in handle.join().expect("residue worker panicked") {
                    slots[i as usize] = Some(report);
                }
            }
        });
        slots
            .into_iter()
            .map(|slot| slot.expect("every residue is swept"))
            .collect::<Result<_>>()?
    };

    let value = per_residue.iter().map(|r| r.dmax_si).max().unwrap_or(1);
    Ok(DmaxReport { value, per_residue })
}

/// Evaluates maximal denumerants of individual elements through the blowup,
/// reusing order tables across queries.
pub struct BlowupProbe<'a> {
    ctx: &'a BlowupContext,
    source: LengthTable,
}

impl<'a> BlowupProbe<'a> {
    pub fn new(ctx: &'a BlowupContext) -> Self {
        BlowupProbe {
            ctx,
            source: LengthTable::new(ctx.source()),
        }
    }

    /// `adj(s) = s - ord(s)·e`.
    pub fn adjustment(&mut self, s: u64) -> Result<u64> {
        if !self.ctx.source.contains_u(s) {
            return Err(Error::NotAMember(s as i64));
        }
        let ord = self.source.order(s)?;
        Ok(s - ord * self.ctx.multiplicity())
    }

    /// Number of `𝒟`-factorizations of `adj(s)` with length at most `ord(s)`.
    pub fn dmax_element(&mut self, s: u64) -> Result<u64> {
        let adj = self.adjustment(s)?;
        let ord = self.source.order(s)?;
        Ok(count_with_length(self.ctx.dset.elements(), adj, |len| len <= ord))
    }
}

pub fn dmax_element_via_blowup(ctx: &BlowupContext, s: u64) -> Result<u64> {
    BlowupProbe::new(ctx).dmax_element(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::max_dnum_element;

    fn worked() -> BlowupContext {
        BlowupContext::new(&Semigroup::new(&[15, 17, 36, 38, 71]).unwrap())
    }

    fn rows(fs: &[Factorization]) -> Vec<Vec<u64>> {
        fs.iter().map(|f| f.coefficients().to_vec()).collect()
    }

    #[test]
    fn blowup_sets() {
        let ctx = BlowupContext::new(&Semigroup::new(&[4, 5, 6]).unwrap());
        assert_eq!(ctx.dset().elements(), &[4, 1, 2]);
        assert!(ctx.blowup().is_natural());
        assert_eq!(worked().dset().elements(), &[15, 2, 21, 23, 56]);

        let arith = BlowupContext::new(&Semigroup::new(&[7, 10, 13, 16]).unwrap());
        assert_eq!(arith.blowup().generators(), &[3, 7]);
    }

    #[test]
    fn blowup_is_no_larger() {
        for g in [&[15u64, 17, 36, 38, 71][..], &[5, 7, 8], &[9, 11, 17, 19]] {
            let s = Semigroup::new(g).unwrap();
            let ctx = BlowupContext::new(&s);
            assert!(ctx.blowup().multiplicity() <= s.multiplicity());
            assert!(ctx.blowup().embedding_dimension() <= s.embedding_dimension());
        }
    }

    #[test]
    fn worked_example_scan() {
        let table = adjustment_table(&worked(), 11).unwrap();
        assert_eq!(table.adjusted_elements(), vec![26, 41, 56]);
        assert_eq!(table.scan_log[0], ScanRow { s: 71, order: 1, adj: 56 });
        let orders: Vec<u64> = table.scan_log.iter().map(|r| r.order).collect();
        assert_eq!(orders, vec![1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 13]);
        assert_eq!(table.scan_log.last().unwrap().s, 221);
        let mins: Vec<u64> = table.entries.iter().map(|x| x.min_order).collect();
        assert_eq!(mins, vec![13, 10, 1]);
    }

    #[test]
    fn worked_example_r_sets() {
        let ctx = worked();
        let report = residue_report(&ctx, 11).unwrap();
        assert_eq!(rows(&report.rsets[0].factorizations), vec![vec![0, 13, 0, 0, 0]]);
        assert_eq!(
            rows(&report.rsets[1].factorizations),
            vec![vec![0, 9, 0, 1, 0], vec![0, 10, 1, 0, 0]]
        );
        assert_eq!(report.rsets[1].length_bound, Some(12));
        assert_eq!(
            rows(&report.rsets[2].factorizations),
            vec![vec![0, 0, 0, 0, 1], vec![0, 5, 0, 2, 0], vec![0, 6, 1, 1, 0]]
        );
        assert_eq!(report.rsets[2].length_bound, Some(9));
        assert_eq!(report.dmax_si, 3);
        assert_eq!(report.witness, 56 + 8 * 15);
    }

    #[test]
    fn bad_residue() {
        assert_eq!(
            adjustment_table(&worked(), 15),
            Err(Error::InvalidResidue { residue: 15, multiplicity: 15 })
        );
    }

    #[test]
    fn additive_residue_is_singleton() {
        let ctx = BlowupContext::new(&Semigroup::new(&[4, 5, 6]).unwrap());
        assert_eq!(adjustment_table(&ctx, 3).unwrap().adjusted_elements(), vec![3]);
    }

    #[test]
    fn small_dmax_values() {
        assert_eq!(dmax(&Semigroup::new(&[4, 5, 6]).unwrap()).unwrap().value, 2);
        assert_eq!(dmax(&Semigroup::natural()).unwrap().value, 1);
        let report = dmax(&Semigroup::new(&[15, 17, 36, 38, 71]).unwrap()).unwrap();
        assert_eq!(report.per_residue[11].dmax_si, 3);
        assert_eq!(report.per_residue.len(), 15);
    }

    #[test]
    fn worker_count_does_not_change_result() {
        let s = Semigroup::new(&[15, 17, 36, 38, 71]).unwrap();
        let one = dmax_with_workers(&s, 1).unwrap();
        for w in [2, 3, 8, 64] {
            assert_eq!(dmax_with_workers(&s, w).unwrap(), one);
        }
    }

    #[test]
    fn element_counts_via_blowup() {
        let ctx = worked();
        assert_eq!(dmax_element_via_blowup(&ctx, 221), Ok(1));
        // (0,10,1,0,0) has length 11 > ord(191) = 10; it only counts from 206 on.
        assert_eq!(dmax_element_via_blowup(&ctx, 191), Ok(1));
        assert_eq!(dmax_element_via_blowup(&ctx, 206), Ok(2));
        assert_eq!(dmax_element_via_blowup(&ctx, 16), Err(Error::NotAMember(16)));
        let small = BlowupContext::new(&Semigroup::new(&[4, 5, 6]).unwrap());
        assert_eq!(dmax_element_via_blowup(&small, 0), Ok(1));

        let mut probe = BlowupProbe::new(&ctx);
        for s in 0..400 {
            if ctx.source().contains_u(s) {
                assert_eq!(
                    probe.dmax_element(s).unwrap(),
                    max_dnum_element(ctx.source(), s).unwrap(),
                    "s = {s}"
                );
            }
        }
    }
}
