//! Classical Dedekind sums and Dedekind-Rademacher sums.
//!
//! `s(a, b) = Σ_{k mod b} ((ka/b))((k/b))`. The naive evaluation is O(b);
//! [`dedekind_fast`] runs the reciprocity-driven Euclidean descent and takes
//! O(log b) steps, so it handles arguments of hundreds of bits.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{validation, Result};
use crate::exactcore::{sawtooth, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DedekindArgs {
    pub a: i64,
    pub b: i64,
}

impl DedekindArgs {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        check_modulus(b)?;
        Ok(DedekindArgs { a, b })
    }

    pub fn naive(&self) -> Result<Rational> {
        dedekind_naive(self.a, self.b)
    }

    pub fn fast(&self) -> Result<Rational> {
        dedekind_fast(self.a, self.b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RademacherArgs {
    pub a: i64,
    pub b: i64,
    pub x: Rational,
    pub y: Rational,
}

impl RademacherArgs {
    pub fn new(a: i64, b: i64, x: Rational, y: Rational) -> Result<Self> {
        check_modulus(b)?;
        Ok(RademacherArgs { a, b, x, y })
    }

    pub fn evaluate(&self) -> Result<Rational> {
        rademacher_sum(self.a, self.b, &self.x, &self.y)
    }
}

fn check_modulus(b: i64) -> Result<()> {
    if b < 1 {
        return Err(validation(format!("modulus b must be positive, got {b}")));
    }
    Ok(())
}

/// Direct O(b) summation.
///
/// With `((k/b)) = (2k - b)/(2b)` for `0 < k < b`, the whole sum is an
/// integer over `4b²`, so accumulation stays in integers.
pub fn dedekind_naive(a: i64, b: i64) -> Result<Rational> {
    check_modulus(b)?;
    let (a, b) = (a as i128, b as i128);
    let mut acc: i128 = 0;
    for k in 1..b {
        let r = (k * a).rem_euclid(b);
        if r != 0 {
            acc += (2 * r - b) * (2 * k - b);
        }
    }
    Ok(Rational::new(acc, 4 * b * b))
}

/// `s(a, b)` by Euclidean descent on the reciprocity law
/// `s(a,b) + s(b,a) = -1/4 + (a/b + 1/(ab) + b/a)/12`.
///
/// Requires `gcd(a, b) = 1`. Base cases: `s(0, b) = 0`, `s(a, 1) = 0`,
/// `s(1, b) = (b-1)(b-2)/(12b)`. Runs in O(log b) steps on integers.
pub fn dedekind_fast(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Result<Rational> {
    let (a, b) = (a.into(), b.into());
    if !b.is_positive() {
        return Err(validation(format!("modulus b must be positive, got {b}")));
    }
    if !a.gcd(&b).is_one() {
        return Err(validation(format!("gcd({a}, {b}) != 1")));
    }
    let mut a = a.mod_floor(&b);
    let mut b = b;
    let b0 = b.clone();
    // In terms of the integer U(a,b) = 12b·s(a,b) the reciprocity step reads
    // a·U(a,b) = a² + b² + 1 - 3ab - b·U(b mod a, a). Descend to a base case,
    // then unwind with exact integer divisions.
    let mut stack = Vec::new();
    let base = loop {
        if a.is_zero() || b.is_one() {
            break BigInt::zero();
        }
        if a.is_one() {
            break (&b - 1u32) * (&b - 2u32);
        }
        let next = b.mod_floor(&a);
        stack.push((a.clone(), b));
        b = a;
        a = next;
    };
    let u = stack.into_iter().rev().fold(base, |inner, (a, b)| {
        let num = &a * &a + &b * &b + 1u32 - 3u32 * &a * &b - &b * inner;
        debug_assert!((&num % &a).is_zero());
        num / a
    });
    Ok(Rational::new(u, 12u32 * b0))
}

/// `s(a, b; x, y) = Σ_{k=0}^{b-1} (((k+y)a/b + x))·(((k+y)/b))` for any
/// rational shifts `x`, `y`.
pub fn rademacher_sum(a: i64, b: i64, x: &Rational, y: &Rational) -> Result<Rational> {
    check_modulus(b)?;
    let a_r = Rational::from(a);
    let b_inv = Rational::new(1, b);
    let mut total = Rational::zero();
    for k in 0..b {
        let shifted = (Rational::from(k) + y) * &b_inv;
        let right = sawtooth(&shifted);
        if right.is_zero() {
            continue;
        }
        let left = sawtooth(&(&shifted * &a_r + x));
        total += left * right;
    }
    Ok(total)
}

/// Knuth's specialization `s(a, b; n/b, 0) = Σ_{k mod b} (((ka + n)/b))((k/b))`.
pub fn knuth_sum(a: i64, b: i64, n: i64) -> Result<Rational> {
    check_modulus(b)?;
    rademacher_sum(a, b, &Rational::new(n, b), &Rational::zero())
}
