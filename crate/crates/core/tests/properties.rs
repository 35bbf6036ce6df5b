mod common;

use intorder::instances::{random_representation_stream, FlagPolicy, RandomSpec};
use intorder::{
    build_poset, canonical_closed_representation, classify, is_consistent, open_all, poset_from_representation,
    quotient_duplicates, realizer_unit_oc, reinflate_realizer, scale, verify_realizer, LinearExtension, MixedInterval,
    Poset, Rational, Realizer,
};
use proptest::prelude::*;

fn arb_poset(max: usize) -> impl Strategy<Value = Poset> {
    (0..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut lt = vec![vec![false; n]; n];
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    lt[i][j] = bits[k];
                    k += 1;
                }
            }
            for m in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        if lt[i][m] && lt[m][j] {
                            lt[i][j] = true;
                        }
                    }
                }
            }
            common::from_matrix(&lt)
        })
    })
}

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-50i64..50, 1i64..12).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn arb_interval() -> impl Strategy<Value = MixedInterval> {
    (arb_rational(), 1i64..20, 1i64..4, any::<bool>(), any::<bool>()).prop_map(|(left, n, d, lc, rc)| {
        MixedInterval::new(left, left + Rational::new(n, d).unwrap(), lc, rc).unwrap()
    })
}

proptest! {
    #[test]
    fn closure_is_idempotent(p in arb_poset(7)) {
        let rel: Vec<(String, String)> = p.relations().map(|(a, b)| (p.name(a).to_owned(), p.name(b).to_owned())).collect();
        let again = build_poset(p.names(), &rel).unwrap();
        prop_assert_eq!(again, p);
    }

    #[test]
    fn pairs_and_relations_partition_all_pairs(p in arb_poset(8)) {
        let n = p.len();
        prop_assert_eq!(p.incomparable_pairs().len() / 2 + p.relations().count(), n * n.saturating_sub(1) / 2);
        for q in p.incomparable_pairs() {
            prop_assert!(p.incomparable_pairs().contains(&q.mirror()));
        }
    }

    #[test]
    fn all_extensions_form_a_realizer(p in arb_poset(5)) {
        let all = common::all_extensions(&p);
        let realizer = Realizer::new(all.into_iter().map(LinearExtension::new).collect());
        prop_assert!(verify_realizer(&p, &realizer).unwrap().is_valid());
    }

    #[test]
    fn duplicates_reinflate_to_valid_realizers(seed in any::<u64>(), copies in proptest::collection::vec(0usize..3, 1..8)) {
        // plant duplicated holdings by giving several elements the same unit interval
        let spec = RandomSpec::new(copies.len(), vec![Rational::ONE], FlagPolicy::Mixed);
        let base = random_representation_stream(&spec, seed, 0).unwrap();
        let mut rep = intorder::Representation::new();
        for ((name, interval), &extra) in base.iter().zip(&copies) {
            rep.insert(name, *interval);
            for c in 0..extra {
                rep.insert(format!("{name}_{c}"), *interval);
            }
        }
        let p = poset_from_representation(&rep);
        let q = quotient_duplicates(&p);
        prop_assert!(q.poset.len() <= copies.len());
        let realizer = realizer_unit_oc(&p, &rep).unwrap();
        prop_assert!(common::realizes(&p, &realizer.extensions.iter().map(|e| e.order.clone()).collect::<Vec<_>>()));
        let quotient_realizer = intorder::exact_dimension(&q.poset, None).unwrap().realizer;
        if quotient_realizer.len() >= 2 {
            let lifted = reinflate_realizer(&q, &quotient_realizer).unwrap();
            prop_assert!(verify_realizer(&p, &lifted).unwrap().is_valid());
        }
    }

    #[test]
    fn canonical_representation_round_trips(seed in any::<u64>(), n in 0usize..=8, grid in 1u32..4) {
        let spec = RandomSpec::new(n, vec![Rational::ZERO, Rational::ONE, Rational::from(2)], FlagPolicy::AllClosed)
            .with_grid(grid);
        let p = poset_from_representation(&random_representation_stream(&spec, seed, 1).unwrap());
        let canon = canonical_closed_representation(&p).unwrap();
        prop_assert!(is_consistent(&canon, &p).unwrap());
        prop_assert_eq!(poset_from_representation(&canon), p);
    }

    #[test]
    fn opening_keeps_comparabilities(seed in any::<u64>(), n in 0usize..=12) {
        let spec = RandomSpec::new(n, vec![Rational::ONE, Rational::from(2)], FlagPolicy::Mixed);
        let rep = random_representation_stream(&spec, seed, 2).unwrap();
        let p = poset_from_representation(&rep);
        let q = poset_from_representation(&open_all(&rep).unwrap());
        for (a, b) in p.relations() {
            prop_assert!(q.lt(a, b));
        }
    }

    #[test]
    fn scaling_scales_lengths(seed in any::<u64>(), r in (1i64..20, 1i64..7)) {
        let r = Rational::new(r.0, r.1).unwrap();
        let spec = RandomSpec::new(10, vec![Rational::ZERO, Rational::ONE, Rational::new(5, 2).unwrap()], FlagPolicy::AllClosed);
        let rep = random_representation_stream(&spec, seed, 3).unwrap();
        let scaled = scale(&rep, r).unwrap();
        let expected: Vec<Rational> = classify(&rep).length_set.iter().map(|&l| l * r).collect();
        prop_assert_eq!(classify(&scaled).length_set.into_iter().collect::<Vec<_>>(), expected);
        prop_assert_eq!(poset_from_representation(&scaled), poset_from_representation(&rep));
    }

    #[test]
    fn rational_order_matches_cross_multiplication(a in arb_rational(), b in arb_rational()) {
        let lhs = a.numer() as i128 * b.denom() as i128;
        let rhs = b.numer() as i128 * a.denom() as i128;
        prop_assert_eq!(a.cmp(&b), lhs.cmp(&rhs));
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn interval_notation_round_trips(i in arb_interval()) {
        prop_assert_eq!(i.to_string().parse::<MixedInterval>().unwrap(), i);
        let json = serde_json::to_string(&i).unwrap();
        prop_assert_eq!(serde_json::from_str::<MixedInterval>(&json).unwrap(), i);
    }

    #[test]
    fn precedence_is_a_strict_order(a in arb_interval(), b in arb_interval(), c in arb_interval()) {
        prop_assert!(!a.precedes(&a));
        prop_assert!(!(a.precedes(&b) && b.precedes(&a)));
        if a.precedes(&b) && b.precedes(&c) {
            prop_assert!(a.precedes(&c));
        }
        prop_assert_eq!(a.intersects(&b), !a.precedes(&b) && !b.precedes(&a));
    }
}
