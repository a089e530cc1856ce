use dashu::base::UnsignedAbs;
use dashu::integer::IBig;
use dashu::rational::RBig;
use proptest::prelude::*;

use euler_hurwitz::cli::parse_rational;
use euler_hurwitz::combinatorics::{bell_eval, bell_partition_sum, stirling1_row};
use euler_hurwitz::harmonic::{alt_binom_sum, alt_binom_sum_bell, coppo_lhs, coppo_rhs, h, hx};
use euler_hurwitz::numerics::{factorial, rat};

fn small_rational() -> impl Strategy<Value = RBig> {
    (-40i64..=40, 1i64..=12).prop_map(|(p, q)| rat(p, q))
}

fn positive_shift() -> impl Strategy<Value = RBig> {
    (1i64..=30, 1i64..=8).prop_map(|(p, q)| rat(p, q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bell_routes_agree(xs in prop::collection::vec(small_rational(), 0..12)) {
        prop_assert_eq!(bell_partition_sum(&xs), bell_eval(&xs));
    }

    #[test]
    fn coppo_holds_at_random_shifts(n in 0u64..25, q in 1u32..6, x in positive_shift()) {
        prop_assert_eq!(coppo_lhs(n, q, &x).unwrap(), coppo_rhs(n, q, &x).unwrap());
    }

    #[test]
    fn alternating_binomial_sums(n in 1u64..40, m in 1u32..7) {
        prop_assert_eq!(alt_binom_sum(n, m), alt_binom_sum_bell(n, m));
    }

    #[test]
    fn shifted_harmonic_at_one_is_plain(n in 0u64..60, m in 1u32..6) {
        prop_assert_eq!(hx(n, m, &RBig::ONE).unwrap(), h(n, m));
    }

    #[test]
    fn shifted_harmonic_step(n in 0u64..40, m in 1u32..5, x in positive_shift()) {
        let step = RBig::ONE / (RBig::from(n) + x.clone()).pow(m as usize);
        prop_assert_eq!(hx(n + 1, m, &x).unwrap(), hx(n, m, &x).unwrap() + step);
    }

    #[test]
    fn stirling_rows_evaluate_falling_factorial(n in 1u64..30, t in -6i64..=6) {
        let row = stirling1_row(n);
        let poly: IBig = row.iter().enumerate().map(|(k, c)| c * IBig::from(t).pow(k)).sum();
        let falling: IBig = (0..n as i64).map(|j| IBig::from(t - j)).product();
        prop_assert_eq!(poly, falling);
        let abs: IBig = row.iter().map(|c| IBig::from(c.unsigned_abs())).sum();
        prop_assert_eq!(abs, IBig::from(factorial(n)));
    }

    #[test]
    fn rationals_round_trip(p in -10_000i64..10_000, q in 1i64..500) {
        let r = rat(p, q);
        prop_assert_eq!(parse_rational(&r.to_string(), false).unwrap(), r);
    }
}
