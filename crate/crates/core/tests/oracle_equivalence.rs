use maxden_core::corpus::{random_semigroups, CorpusSpec};
use maxden_core::engine::{dmax, BlowupContext, BlowupProbe};
use maxden_core::factor::{enumerate_factorizations, max_dnum_element, LengthTable};
use maxden_core::oracle::{
    oracle_dmax, oracle_dmax_empirical, oracle_element_table, oracle_factorizations, OracleBound,
};
use maxden_core::{GeneratingSet, Generators, Semigroup};
use proptest::prelude::*;

fn corpus() -> Vec<Semigroup> {
    random_semigroups(0x5eed, 60, CorpusSpec::default())
}

#[test]
fn engine_matches_oracle_on_corpus() {
    for s in corpus() {
        let bound = OracleBound::auto(&s);
        let expected = oracle_dmax(&s, &bound).unwrap();
        assert_eq!(dmax(&s).unwrap().value, expected, "{s}");
    }
}

#[test]
fn element_counts_match_oracle_up_to_bound() {
    for s in corpus().into_iter().take(30) {
        let ctx = BlowupContext::new(&s);
        let mut probe = BlowupProbe::new(&ctx);
        let bound = OracleBound::auto(&s);
        for (n, expected) in oracle_element_table(&s, bound.max_element).into_iter().enumerate() {
            let got = probe.dmax_element(n as u64).ok();
            assert_eq!(got, expected, "{s}, n = {n}");
        }
    }
}

#[test]
fn bound_is_stable_under_growth() {
    for s in corpus().into_iter().take(15) {
        let bound = OracleBound::auto(&s);
        let at_auto = oracle_dmax(&s, &bound).unwrap();
        let doubled = OracleBound::fixed(bound.max_element * 2);
        assert_eq!(oracle_dmax(&s, &doubled).unwrap(), at_auto, "{s}");
        let (empirical, _) = oracle_dmax_empirical(&s);
        assert_eq!(empirical, at_auto, "{s}");
    }
}

#[test]
fn orders_agree_with_enumeration() {
    for s in corpus().into_iter().take(20) {
        let mut table = LengthTable::new(&s);
        for n in 0..=300u64 {
            let fs = enumerate_factorizations(&s, n);
            let lengths: Vec<u64> = fs.iter().map(|f| f.length()).collect();
            match (lengths.iter().max(), lengths.iter().min()) {
                (Some(&hi), Some(&lo)) => {
                    assert_eq!(table.order(n), Ok(hi), "{s}, n = {n}");
                    assert_eq!(table.min_order(n), Ok(lo), "{s}, n = {n}");
                    assert!(lo <= hi);
                    let count = lengths.iter().filter(|&&l| l == hi).count() as u64;
                    assert_eq!(max_dnum_element(&s, n), Ok(count));
                    assert!(count >= 1);
                }
                _ => {
                    assert!(!s.contains_u(n));
                    assert!(table.order(n).is_err());
                }
            }
        }
    }
}

fn generating_set() -> impl Strategy<Value = Vec<u64>> {
    proptest::collection::btree_set(1u64..40, 1..5)
        .prop_map(|set| set.into_iter().collect::<Vec<_>>())
        .prop_shuffle()
}

proptest! {
    #[test]
    fn enumerator_matches_naive_recursion(gens in generating_set(), n in 0u64..120) {
        let set = GeneratingSet::new(gens.clone()).unwrap();
        let fast = enumerate_factorizations(&set, n);
        let slow = oracle_factorizations(&gens, n);
        prop_assert_eq!(&fast, &slow);
        for f in &fast {
            prop_assert_eq!(f.evaluate(set.generators()), n);
            prop_assert_eq!(f.length(), f.coefficients().iter().sum::<u64>());
        }
    }

    #[test]
    fn apery_set_is_complete(gens in proptest::collection::vec(2u64..60, 2..5)) {
        prop_assume!(maxden_core::arith::gcd_all(&gens) == 1);
        let s = Semigroup::new(&gens).unwrap();
        let e = s.multiplicity();
        let ap = s.apery(e).unwrap().elements;
        prop_assert_eq!(ap.len() as u64, e);
        prop_assert_eq!(ap[0], 0);
        let mut classes: Vec<u64> = ap.iter().map(|w| w % e).collect();
        classes.sort_unstable();
        prop_assert_eq!(classes, (0..e).collect::<Vec<_>>());
        for &w in &ap {
            prop_assert!(!enumerate_factorizations(&s, w).is_empty());
            prop_assert!(w < e || enumerate_factorizations(&s, w - e).is_empty());
        }
    }
}
