use algknot_core::harness::{enumerate_tuples, HypothesisFilter};
use algknot_core::{
    char_divisor, char_divisor_brieskorn, decide_brieskorn_cobordism, equivariant_signatures,
    milnor_number, pf_polynomial, recover_exponents, stabilize, witt_class, witt_equivalent_over_r,
    BrieskornExponents, Verdict, WeightSystem,
};
use proptest::prelude::*;

fn exps(vars: usize, max: u64) -> impl Strategy<Value = BrieskornExponents> {
    prop::collection::vec(2..=max, vars).prop_map(|v| BrieskornExponents::new(v).unwrap())
}

fn pair(
    max_vars: usize,
    max: u64,
) -> impl Strategy<Value = (BrieskornExponents, BrieskornExponents)> {
    (1..=max_vars).prop_flat_map(move |v| (exps(v, max), exps(v, max)))
}

fn odd_form(w: &WeightSystem) -> WeightSystem {
    if w.variables() % 2 == 1 {
        w.clone()
    } else {
        stabilize(w)
    }
}

#[test]
fn signatures_detect_witt_class_exhaustively() {
    for v in 1..=3 {
        let tuples: Vec<_> = enumerate_tuples(v, 7, HypothesisFilter::None).collect();
        let sigs: Vec<_> = tuples
            .iter()
            .map(|e| equivariant_signatures(&odd_form(&e.to_weights())).unwrap())
            .collect();
        for i in 0..tuples.len() {
            for j in i..tuples.len() {
                let witt = witt_equivalent_over_r(&tuples[i].to_weights(), &tuples[j].to_weights())
                    .unwrap();
                assert_eq!(witt, sigs[i] == sigs[j], "{} vs {}", tuples[i], tuples[j]);
            }
        }
    }
}

#[test]
fn recovered_exponents_reproduce_the_divisor() {
    for v in 1..=3 {
        for e in enumerate_tuples(v, 8, HypothesisFilter::None) {
            let d = char_divisor_brieskorn(&e).mod2().unwrap();
            if let Ok(r) = recover_exponents(&d, v) {
                let back = BrieskornExponents::new(r.exponents.clone()).unwrap();
                assert_eq!(char_divisor_brieskorn(&back).mod2().unwrap(), d, "{e}");
                assert_eq!(r.hypothesis_violated, !back.has_no_multiple(), "{e}");
            }
        }
    }
}

#[test]
fn weighted_pf_matches_milnor_orlik_count() {
    let cases: &[&[(u64, u64)]] = &[
        &[(5, 2), (5, 1)],
        &[(3, 1), (3, 1), (3, 1)],
        &[(7, 2), (7, 3), (7, 1)],
    ];
    for &pairs in cases {
        let w = WeightSystem::from_pairs(pairs).unwrap();
        let p = pf_polynomial(&w).unwrap();
        assert_eq!(p.eval_at_one(), milnor_number(&w).unwrap(), "{w}");
        let mass = char_divisor(&w).unwrap().total_mass();
        assert_eq!(mass.to_integer(), milnor_number(&w).unwrap(), "{w}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn witt_class_is_a_complete_invariant((a, b) in pair(3, 10)) {
        let (wa, wb) = (a.to_weights(), b.to_weights());
        prop_assert_eq!(
            witt_equivalent_over_r(&wa, &wb).unwrap(),
            witt_class(&wa).unwrap() == witt_class(&wb).unwrap()
        );
    }

    #[test]
    fn stabilization_preserves_witt((a, b) in pair(4, 9)) {
        let (wa, wb) = (a.to_weights(), b.to_weights());
        prop_assert_eq!(
            witt_equivalent_over_r(&wa, &wb).unwrap(),
            witt_equivalent_over_r(&stabilize(&wa), &stabilize(&wb)).unwrap()
        );
        prop_assert_eq!(pf_polynomial(&stabilize(&wa)).unwrap(), pf_polynomial(&wa).unwrap().shift(1, 2));
    }

    #[test]
    fn verdict_is_consistent_with_criteria((a, b) in pair(3, 12)) {
        let r = decide_brieskorn_cobordism(&a, &b).unwrap();
        match r.verdict {
            Verdict::Cobordant => {
                prop_assert_eq!(a.sorted(), b.sorted());
                prop_assert!(r.witt_over_r && r.cot_test && r.mod2_congruent && r.odd_sets_equal && r.fox_milnor);
            }
            Verdict::UnknownHypothesisNotMet => {
                prop_assert!(r.witt_over_r && r.mod2_congruent && r.odd_sets_equal);
                prop_assert!(!(a.has_no_multiple() && b.has_no_multiple()));
            }
            Verdict::NotCobordant => prop_assert_ne!(a.sorted(), b.sorted()),
        }
        prop_assert_eq!(r.witt_over_r, r.signatures_equal);
        let swapped = decide_brieskorn_cobordism(&b, &a).unwrap();
        prop_assert_eq!(swapped.verdict, r.verdict);
    }

    #[test]
    fn recovery_round_trip(e in (1usize..=3).prop_flat_map(|v| exps(v, 12))) {
        prop_assume!(e.has_no_multiple());
        let d = char_divisor_brieskorn(&e).mod2().unwrap();
        let r = recover_exponents(&d, e.variables()).unwrap();
        prop_assert_eq!(r.exponents, e.sorted());
        prop_assert!(!r.hypothesis_violated);
    }
}
