//! The literal expression against the independent sieve.

use folded_prime::oracle::{build_sieve, nth_prime, pi, sieve_for_nth};
use folded_prime::{
    evaluate, evaluate_with, indicator, prefix_count, record_lift, trace, EvalMode,
    IndicatorVariant, Schedule, Strategy,
};

const J_MAX: u64 = 10_000;

#[test]
fn indicator_matches_sieve_both_variants() {
    let t = build_sieve(J_MAX).unwrap();
    for j in 2..=J_MAX {
        let gcd = indicator(j, IndicatorVariant::GcdForm).unwrap();
        let delta = indicator(j, IndicatorVariant::DeltaForm).unwrap();
        assert_eq!(gcd, delta, "variants disagree at j={j}");
        assert_eq!(gcd.is_one(), t.is_prime(j).unwrap(), "j={j}");
    }
}

#[test]
fn prefix_count_is_pi() {
    let t = build_sieve(J_MAX).unwrap();
    for i in 1..=400 {
        assert_eq!(
            prefix_count(i, IndicatorVariant::GcdForm).unwrap(),
            pi(&t, i).unwrap(),
            "i={i}"
        );
    }
    for i in [1_000, 4_099, 7_919, J_MAX] {
        assert_eq!(
            prefix_count(i, IndicatorVariant::DeltaForm).unwrap(),
            pi(&t, i).unwrap(),
            "i={i}"
        );
    }
    let mut running = 0;
    for i in 2..=J_MAX {
        running += indicator(i, IndicatorVariant::GcdForm).unwrap().as_u64();
        assert_eq!(running, pi(&t, i).unwrap(), "i={i}");
    }
}

#[test]
fn fast_path_ground_truth_all_combinations() {
    let t = sieve_for_nth(500).unwrap();
    for x in 0..500u64 {
        let want = nth_prime(&t, x + 1).unwrap();
        for schedule in Schedule::ENUMERATOR {
            for variant in [IndicatorVariant::GcdForm, IndicatorVariant::DeltaForm] {
                let got = evaluate_with(
                    x,
                    schedule,
                    EvalMode::Incremental,
                    variant,
                    Strategy::EarlyExit,
                );
                assert_eq!(got.unwrap(), want, "x={x} {schedule:?} {variant:?}");
            }
        }
    }
}

#[test]
fn literal_ground_truth() {
    let t = sieve_for_nth(500).unwrap();
    for x in 0..500u64 {
        let want = nth_prime(&t, x + 1).unwrap();
        let got = evaluate(
            x,
            Schedule::Linear,
            EvalMode::Incremental,
            IndicatorVariant::DeltaForm,
        );
        assert_eq!(got.unwrap(), want, "x={x}");
        if x <= 150 {
            let got = evaluate(
                x,
                Schedule::Linear,
                EvalMode::Incremental,
                IndicatorVariant::GcdForm,
            );
            assert_eq!(got.unwrap(), want, "x={x}");
        }
        if x <= 30 {
            for variant in [IndicatorVariant::GcdForm, IndicatorVariant::DeltaForm] {
                assert_eq!(
                    evaluate(x, Schedule::Square, EvalMode::Incremental, variant).unwrap(),
                    want
                );
            }
        }
    }
}

#[test]
fn modes_agree_to_60() {
    for x in (0..=60).step_by(3) {
        let inc = evaluate(
            x,
            Schedule::Linear,
            EvalMode::Incremental,
            IndicatorVariant::GcdForm,
        )
        .unwrap();
        let naive = evaluate(
            x,
            Schedule::Linear,
            EvalMode::Naive,
            IndicatorVariant::GcdForm,
        )
        .unwrap();
        assert_eq!(inc, naive, "x={x}");
    }
}

#[test]
fn traces_are_coherent() {
    let t = sieve_for_nth(121).unwrap();
    for x in 0..=120 {
        let tr = trace(x, Schedule::Linear).unwrap();
        let p = nth_prime(&t, x + 1).unwrap();
        assert!(tr.is_coherent(), "x={x}");
        assert_eq!(tr.step_sum(), tr.result - 1);
        assert_eq!(tr.flip_index(), Some(p));
        assert_eq!(
            tr.result,
            evaluate(
                x,
                Schedule::Linear,
                EvalMode::Incremental,
                IndicatorVariant::GcdForm
            )
            .unwrap()
        );
        for w in tr.rows.windows(2) {
            assert_eq!(w[1].prefix, w[0].prefix + w[1].indicator.as_u64());
        }
    }
}

#[test]
fn record_lift_certified() {
    let t = sieve_for_nth(202).unwrap();
    for l in 2..=200 {
        let p = record_lift(l, Schedule::Linear).unwrap();
        assert!(p > l);
        assert!(t.is_prime(p).unwrap());
        if l <= 30 {
            assert_eq!(record_lift(l, Schedule::Square).unwrap(), p);
        }
    }
}
