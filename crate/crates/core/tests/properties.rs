use proptest::prelude::*;

use folded_prime::oracle::build_sieve;
use folded_prime::schedule::{u_lin, u_sq};
use folded_prime::{delta, divisor_hit, indicator, step, Bit, IndicatorVariant, Nat};

proptest! {
    #[test]
    fn step_is_comparison(s in 0u64..1_000_000, x in 0u64..1_000_000) {
        prop_assert_eq!(step(s, x).unwrap().is_one(), s <= x);
    }

    #[test]
    fn divisor_tests_detect_divisibility(j in 3u64..100_000, k_frac in 0.0f64..1.0) {
        let k = 2 + ((j - 3) as f64 * k_frac) as u64;
        let want = Bit::from(j % k == 0);
        prop_assert_eq!(divisor_hit(k, j).unwrap(), want);
        prop_assert_eq!(delta(j, k).unwrap(), want);
    }

    #[test]
    fn variants_agree(j in 2u64..20_000) {
        prop_assert_eq!(
            indicator(j, IndicatorVariant::GcdForm).unwrap(),
            indicator(j, IndicatorVariant::DeltaForm).unwrap()
        );
    }

    #[test]
    fn checked_add_never_wraps(a: u64, b: u64) {
        match Nat::new(a).add(Nat::new(b), "p") {
            Ok(n) => prop_assert_eq!(Some(n.get()), a.checked_add(b)),
            Err(_) => prop_assert!(a.checked_add(b).is_none()),
        }
    }

    #[test]
    fn square_dominates_linear_schedule_eventually(x in 20u64..1_000_000) {
        prop_assert!(u_sq(x).unwrap() >= u_lin(x).unwrap());
    }
}

#[test]
fn sieve_agrees_with_trial_division() {
    let t = build_sieve(3000).unwrap();
    for j in 2..=3000u64 {
        let trial = (2..j).take_while(|k| k * k <= j).all(|k| j % k != 0);
        assert_eq!(t.is_prime(j).unwrap(), trial);
    }
}
