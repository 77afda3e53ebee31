mod common;

use common::{dedekind_cot, r};
use dedekind_core::dedekind::{dedekind_fast, dedekind_naive, knuth_sum, rademacher_sum, DedekindArgs};
use dedekind_core::exactcore::sawtooth;
use dedekind_core::{Error, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

#[test]
fn frozen_values() {
    // computed by direct summation and frozen
    let cases = [(1, 3, r(1, 18)), (2, 3, r(-1, 18)), (3, 7, r(-1, 14)), (5, 17, r(1, 17)), (7, 100, r(7, 8))];
    for (a, b, want) in cases {
        assert_eq!(dedekind_naive(a, b).unwrap(), want, "s({a},{b})");
        assert_eq!(dedekind_fast(a, b).unwrap(), want, "s({a},{b})");
    }
    assert_eq!(DedekindArgs::new(2, 3).unwrap().fast().unwrap(), r(-1, 18));
    assert!(matches!(DedekindArgs::new(2, 0), Err(Error::Validation(_))));
}

#[test]
fn matches_cotangent_sum() {
    for b in 2..60i64 {
        for a in 1..b {
            if a.gcd(&b) == 1 {
                let exact = dedekind_naive(a, b).unwrap().to_f64();
                assert!((exact - dedekind_cot(a, b)).abs() < 1e-9, "s({a},{b})");
            }
        }
    }
}

#[test]
fn large_arguments_satisfy_reciprocity() {
    // consecutive Fibonacci numbers give the longest descent for their size
    let (mut a, mut b) = (BigInt::from(1), BigInt::from(2));
    for _ in 0..300 {
        (a, b) = (b.clone(), a + b);
    }
    let lhs = dedekind_fast(a.clone(), b.clone()).unwrap() + dedekind_fast(b.clone(), a.clone()).unwrap();
    let (ra, rb) = (Rational::from(a.clone()), Rational::from(b.clone()));
    let rhs = r(-1, 4) + (&ra / &rb + (&ra * &rb).recip().unwrap() + &rb / &ra) / Rational::from(12);
    assert_eq!(lhs, rhs);
    // 12b·s(a, b) is an integer
    let scaled = dedekind_fast(a, b.clone()).unwrap() * Rational::from(b * 12);
    assert!(scaled.is_integer());
}

#[test]
fn rademacher_at_integer_shifts_is_classical() {
    for b in 1..25i64 {
        for a in 0..b {
            for (x, y) in [(0, 0), (1, 0), (-2, 3)] {
                let v = rademacher_sum(a, b, &Rational::from(x), &Rational::from(y)).unwrap();
                assert_eq!(v, dedekind_naive(a, b).unwrap());
            }
        }
    }
}

proptest! {
    #[test]
    fn fast_equals_naive(b in 1i64..400, a in -2000i64..2000) {
        prop_assume!(a.gcd(&b) == 1);
        prop_assert_eq!(dedekind_fast(a, b).unwrap(), dedekind_naive(a, b).unwrap());
    }

    #[test]
    fn naive_is_periodic_and_odd(b in 1i64..200, a in -500i64..500, k in -5i64..5) {
        let s = dedekind_naive(a, b).unwrap();
        prop_assert_eq!(dedekind_naive(a + k * b, b).unwrap(), s.clone());
        prop_assert_eq!(dedekind_naive(-a, b).unwrap(), -s);
    }

    #[test]
    fn six_b_times_sum_is_integral(b in 1i64..300, a in 0i64..300) {
        prop_assume!(a.gcd(&b) == 1);
        prop_assert!((dedekind_naive(a, b).unwrap() * Rational::from(6 * b)).is_integer());
    }

    #[test]
    fn rademacher_single_term(a in -20i64..20, xn in -40i64..40, xd in 1i64..20, yn in -40i64..40, yd in 1i64..20) {
        let (x, y) = (r(xn, xd), r(yn, yd));
        let want = sawtooth(&(Rational::from(a) * &y + &x)) * sawtooth(&y);
        prop_assert_eq!(rademacher_sum(a, 1, &x, &y).unwrap(), want);
    }

    #[test]
    fn knuth_sum_is_periodic_in_n(a in 0i64..30, b in 1i64..30, n in -60i64..60) {
        prop_assert_eq!(knuth_sum(a, b, n).unwrap(), knuth_sum(a, b, n + b).unwrap());
    }
}
