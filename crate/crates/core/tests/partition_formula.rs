mod common;

use common::{count_by_enumeration, q_closed_form, r};
use dedekind_core::partition::{
    count_as_int, emit_quasipolynomial, interior_count, interior_formula, partition_count, partition_counts,
    partition_formula, q_polynomial, q_value, PartitionFormula, PartsTuple,
};
use dedekind_core::Error;
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

fn t(v: &[i64]) -> PartsTuple {
    PartsTuple::new(v.to_vec()).unwrap()
}

/// Pairwise-coprime tuple of 1 to 4 parts drawn from `1..=max`.
fn tuple_strategy(max: i64) -> impl Strategy<Value = PartsTuple> {
    prop::collection::vec(1..=max, 1..=4).prop_map(|raw| {
        let mut kept: Vec<i64> = Vec::new();
        for a in raw {
            if kept.iter().all(|k| k.gcd(&a) == 1) {
                kept.push(a);
            }
        }
        PartsTuple::new(kept).unwrap()
    })
}

#[test]
fn validation() {
    assert!(matches!(PartsTuple::new(vec![]), Err(Error::Validation(_))));
    assert!(matches!(PartsTuple::new(vec![2, 4]), Err(Error::Validation(_))));
    assert!(matches!(PartsTuple::new(vec![3, 0]), Err(Error::Validation(_))));
    assert!(PartsTuple::new(vec![1, 1, 5]).is_ok());
    assert!(matches!(partition_formula(&t(&[2, 3]), -1), Err(Error::Validation(_))));
    assert!(matches!(interior_formula(&t(&[2, 3]), 0), Err(Error::Validation(_))));
}

#[test]
fn dp_matches_enumeration() {
    for parts in [&[1, 2][..], &[2, 3], &[3, 5, 7], &[1, 1, 2, 3], &[4, 9, 11, 13]] {
        let counts = partition_counts(&t(parts), 80);
        for (n, c) in counts.iter().enumerate() {
            assert_eq!(*c, count_by_enumeration(parts, n as i64).into(), "{parts:?} {n}");
        }
    }
}

#[test]
fn frozen_counts() {
    assert_eq!(partition_count(&t(&[1, 2]), 4), 3u32.into());
    assert_eq!(partition_formula(&t(&[1, 2]), 4).unwrap(), BigInt::from(3));
    assert_eq!(partition_formula(&t(&[3, 7]), 11).unwrap(), BigInt::from(0));
    // frozen from direct enumeration
    assert_eq!(partition_formula(&t(&[4, 9, 11]), 23).unwrap(), BigInt::from(1));
    assert_eq!(partition_formula(&t(&[4, 9, 11]), 24).unwrap(), BigInt::from(2));
    assert_eq!(partition_formula(&t(&[3, 5, 7]), 100).unwrap(), BigInt::from(55));
    assert_eq!(partition_formula(&t(&[1, 2, 3]), 100).unwrap(), BigInt::from(884));
}

#[test]
fn q_closed_forms() {
    assert_eq!(q_value(&t(&[5]), 17).unwrap(), r(1, 5));
    assert_eq!(q_value(&t(&[2, 3]), 0).unwrap(), r(5, 12));
    assert_eq!(q_polynomial(&t(&[2, 3])).unwrap(), vec![r(5, 12), r(1, 6)]);
    for parts in [&[3, 4, 5][..], &[1, 2, 3, 5], &[7, 8, 9, 11]] {
        for n in -10..10 {
            assert_eq!(q_value(&t(parts), n).unwrap(), q_closed_form(parts, n), "{parts:?} {n}");
        }
    }
}

#[test]
fn interior_vanishing_band() {
    let parts = t(&[3, 5, 7]);
    for n in 1..15 {
        assert_eq!(interior_formula(&parts, n).unwrap(), BigInt::from(0));
    }
    assert_eq!(interior_formula(&parts, 15).unwrap(), BigInt::from(1));
}

#[test]
fn quasipolynomial_shape() {
    let qp = emit_quasipolynomial(&t(&[1, 2, 3])).unwrap();
    assert_eq!(qp.poly.len(), 3);
    let moduli: Vec<i64> = qp.tables.iter().map(|tab| tab.modulus).collect();
    assert_eq!(moduli, vec![2, 3]);
    let json = serde_json::to_value(&qp).unwrap();
    assert_eq!(json["parts"], serde_json::json!([1, 2, 3]));
    assert_eq!(json["poly"][0], "47/72");
    for n in 0..60 {
        assert_eq!(qp.eval(n), count_as_int(&partition_count(&qp.parts, n)).into());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn q_matches_closed_form(parts in tuple_strategy(40), n in -300i64..300) {
        prop_assert_eq!(q_value(&parts, n).unwrap(), q_closed_form(parts.parts(), n));
    }

    #[test]
    fn formula_matches_dp(parts in tuple_strategy(25), n in 0i64..300) {
        let want = count_as_int(&partition_count(&parts, n));
        prop_assert_eq!(partition_formula(&parts, n).unwrap(), want.clone());
        prop_assert_eq!(PartitionFormula::new(&parts).unwrap().count(n).unwrap(), want);
    }

    #[test]
    fn interior_matches_dp(parts in tuple_strategy(25), n in 1i64..300) {
        let want = count_as_int(&interior_count(&parts, n));
        prop_assert_eq!(interior_formula(&parts, n).unwrap(), want);
    }

    #[test]
    fn q_is_a_polynomial(parts in tuple_strategy(30), n in -100i64..100) {
        let poly = q_polynomial(&parts).unwrap();
        prop_assert_eq!(poly.len(), parts.parts().len());
        let x = dedekind_core::Rational::from(n);
        let value = poly.iter().rev().fold(dedekind_core::Rational::zero(), |acc, c| acc * &x + c);
        prop_assert_eq!(value, q_value(&parts, n).unwrap());
    }
}
