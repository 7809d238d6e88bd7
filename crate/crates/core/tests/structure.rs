//! Structural facts about adjustments and R-sets, checked across a corpus.

use maxden_core::corpus::{random_semigroups, CorpusSpec};
use maxden_core::engine::{adjustment_tables, r_sets, BlowupContext, BlowupProbe};
use maxden_core::factor::{enumerate_factorizations, max_dnum_element, LengthTable};
use maxden_core::oracle::OracleBound;
use maxden_core::{Generators, Semigroup};

fn corpus() -> Vec<Semigroup> {
    let mut v = random_semigroups(0x57c7, 50, CorpusSpec::default());
    v.push(Semigroup::new(&[15, 17, 36, 38, 71]).unwrap());
    v.push(Semigroup::new(&[4, 5, 6]).unwrap());
    v.push(Semigroup::natural());
    v
}

#[test]
fn adjustments_sit_between_blowup_apery_and_blowup() {
    for s in corpus() {
        let ctx = BlowupContext::new(&s);
        let e = s.multiplicity();
        for table in adjustment_tables(&ctx).unwrap() {
            let i = table.residue;
            let f = ctx.blowup_apery_by_class()[i as usize];
            assert_eq!(table.entries[0].u, f, "{s}, residue {i}");
            for entry in &table.entries {
                assert_eq!(entry.u % e, i);
                assert!(ctx.blowup().contains_u(entry.u), "{s}: {} ∉ B", entry.u);
            }
            // nonincreasing, ending at f_i
            for pair in table.scan_log.windows(2) {
                assert!(pair[1].adj <= pair[0].adj, "{s}, residue {i}");
                assert_eq!(pair[1].s, pair[0].s + e);
            }
            assert_eq!(table.scan_log.last().unwrap().adj, f);
            assert_eq!(table.scan_log[0].s, s.apery_by_class()[i as usize]);
        }
    }
}

#[test]
fn adjustment_is_constant_past_the_stop_point() {
    for s in corpus() {
        let ctx = BlowupContext::new(&s);
        let e = s.multiplicity();
        let mut probe = BlowupProbe::new(&ctx);
        for table in adjustment_tables(&ctx).unwrap() {
            let last = *table.scan_log.last().unwrap();
            for k in 1..=4 {
                assert_eq!(probe.adjustment(last.s + k * e).unwrap(), last.adj, "{s}");
            }
        }
    }
}

#[test]
fn r_sets_are_nonempty_and_witnessed() {
    for s in corpus() {
        let ctx = BlowupContext::new(&s);
        let e = s.multiplicity();
        let mut probe = BlowupProbe::new(&ctx);
        for table in adjustment_tables(&ctx).unwrap() {
            let report = r_sets(&ctx, &table).unwrap();
            assert_eq!(
                report.dmax_si,
                report.rsets.iter().map(|r| r.len() as u64).max().unwrap()
            );
            for (j, rset) in report.rsets.iter().enumerate() {
                assert!(!rset.is_empty(), "{s}: R({}) empty", rset.u);
                assert_eq!(max_dnum_element(&s, rset.witness).unwrap(), rset.len() as u64);
                assert_eq!(probe.adjustment(rset.witness).unwrap(), rset.u);
                // the bound against u_{j-1} implies the bound against every u_k, k < j
                if j > 0 {
                    for earlier in &report.rsets[..j] {
                        let bound = earlier.min_order as i64 - ((rset.u - earlier.u) / e) as i64;
                        for x in &rset.factorizations {
                            assert!((x.length() as i64) < bound, "{s}: {x} in R({})", rset.u);
                        }
                    }
                }
                for x in &rset.factorizations {
                    assert_eq!(x.coefficients()[0], 0, "{s}: {x} in R({})", rset.u);
                }
            }
        }
    }
}

#[test]
fn no_element_beats_its_r_set() {
    for s in corpus() {
        let ctx = BlowupContext::new(&s);
        let e = s.multiplicity();
        let bound = OracleBound::auto(&s).max_element;
        let reports: Vec<_> = adjustment_tables(&ctx)
            .unwrap()
            .iter()
            .map(|t| r_sets(&ctx, t).unwrap())
            .collect();
        let mut probe = BlowupProbe::new(&ctx);
        for n in (0..=bound).filter(|&n| s.contains_u(n)) {
            let adj = probe.adjustment(n).unwrap();
            let report = &reports[(n % e) as usize];
            let rset = report.rsets.iter().find(|r| r.u == adj).expect("adj(n) is tabulated");
            assert!(probe.dmax_element(n).unwrap() <= rset.len() as u64, "{s}, n = {n}");
        }
    }
}

#[test]
fn transfer_between_semigroup_and_blowup_factorizations() {
    for s in corpus().into_iter().take(25) {
        let ctx = BlowupContext::new(&s);
        let e = s.multiplicity();
        let d = ctx.dset().elements().to_vec();
        let bound = OracleBound::auto(&s).max_element.min(400);
        let mut orders = LengthTable::new(&s);
        for n in (0..=bound).filter(|&n| s.contains_u(n)) {
            // S-factorization of length r  ->  (0, x_1, …, x_t) over 𝒟 of n - r·e
            for x in enumerate_factorizations(&s, n) {
                let r = x.length();
                let mut y = x.coefficients().to_vec();
                y[0] = 0;
                let lifted: u64 = y.iter().zip(&d).map(|(c, g)| c * g).sum();
                assert_eq!(lifted + r * e, n, "{s}, n = {n}");
                assert!(y.iter().sum::<u64>() <= r);
            }
            // 𝒟-factorization y of n - r·e with |y| ≤ r  ->  S-factorization of length r + y_0
            let ord = orders.order(n).unwrap();
            for r in 0..=ord {
                let Some(rest) = n.checked_sub(r * e) else { break };
                for y in enumerate_factorizations(ctx.dset(), rest) {
                    let len = y.length();
                    if len > r {
                        continue;
                    }
                    let mut x = y.coefficients().to_vec();
                    x[0] = 2 * x[0] + r - len;
                    let value: u64 = x.iter().zip(s.generators()).map(|(c, g)| c * g).sum();
                    assert_eq!(value, n, "{s}, n = {n}, r = {r}");
                    assert_eq!(x.iter().sum::<u64>(), r + y.coefficients()[0]);
                    assert!(r + y.coefficients()[0] <= ord);
                }
            }
        }
    }
}

#[test]
fn short_blowup_factorizations_of_adjustments_avoid_e() {
    for s in corpus().into_iter().take(25) {
        let ctx = BlowupContext::new(&s);
        let mut probe = BlowupProbe::new(&ctx);
        let mut orders = LengthTable::new(&s);
        let bound = OracleBound::auto(&s).max_element.min(400);
        for n in (0..=bound).filter(|&n| s.contains_u(n)) {
            let adj = probe.adjustment(n).unwrap();
            let ord = orders.order(n).unwrap();
            for y in enumerate_factorizations(ctx.dset(), adj) {
                if y.length() <= ord {
                    assert_eq!(y.coefficients()[0], 0, "{s}, n = {n}");
                }
            }
        }
    }
}

#[test]
fn blowup_is_what_orders_peel_off() {
    // B = { s - k·e : 1 ≤ k ≤ ord(s) }, checked below the blowup's conductor.
    for s in corpus().into_iter().take(25) {
        let ctx = BlowupContext::new(&s);
        let e = s.multiplicity();
        let b = ctx.blowup();
        let limit = (b.frobenius() + 1).max(0) as u64 + e;
        let mut peeled = vec![false; limit as usize + 1];
        let mut orders = LengthTable::new(&s);
        let s_limit = limit + e * (limit + 1);
        for n in (0..=s_limit).filter(|&n| s.contains_u(n)) {
            let ord = orders.order(n).unwrap();
            for k in 1..=ord {
                let v = n - k * e;
                if v <= limit {
                    peeled[v as usize] = true;
                }
            }
        }
        for v in 0..=limit {
            assert_eq!(peeled[v as usize], b.contains_u(v), "{s}, v = {v}");
        }
    }
}
