//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::f64::consts::PI;

use dedekind_core::Rational;
use num_complex::Complex64;

pub fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// The textbook closed forms of `q(a₀,…,a_d, n)` for `d ≤ 3`, term by term.
pub fn q_closed_form(a: &[i64], n: i64) -> Rational {
    let n = Rational::from(n);
    let inv = |x: i64| r(1, x);
    match *a {
        [a0] => inv(a0),
        [a0, a1] => &n * inv(a0 * a1) + r(1, 2) * (inv(a0) + inv(a1)),
        [a0, a1, a2] => {
            let p = a0 * a1 * a2;
            &n * &n * inv(2 * p)
                + &n * r(1, 2) * (inv(a0 * a1) + inv(a0 * a2) + inv(a1 * a2))
                + r(1, 12) * (r(3, a0) + r(3, a1) + r(3, a2) + r(a0, a1 * a2) + r(a1, a0 * a2) + r(a2, a0 * a1))
        }
        [a0, a1, a2, a3] => {
            let p = a0 * a1 * a2 * a3;
            let cube = &n * &n * &n;
            let triples = inv(a0 * a1 * a2) + inv(a0 * a1 * a3) + inv(a0 * a2 * a3) + inv(a1 * a2 * a3);
            let pairs = inv(a0 * a1) + inv(a0 * a2) + inv(a0 * a3) + inv(a1 * a2) + inv(a1 * a3) + inv(a2 * a3);
            let lone = r(a0, a1 * a2 * a3) + r(a1, a0 * a2 * a3) + r(a2, a0 * a1 * a3) + r(a3, a0 * a1 * a2);
            let mixed = r(a0, a1 * a2)
                + r(a0, a1 * a3)
                + r(a0, a2 * a3)
                + r(a1, a0 * a2)
                + r(a1, a0 * a3)
                + r(a1, a2 * a3)
                + r(a2, a0 * a1)
                + r(a2, a0 * a3)
                + r(a2, a1 * a3)
                + r(a3, a0 * a1)
                + r(a3, a0 * a2)
                + r(a3, a1 * a2);
            cube * inv(6 * p)
                + &n * &n * r(1, 4) * triples
                + &n * r(1, 4) * pairs
                + &n * r(1, 12) * lone
                + r(1, 24) * mixed
                + r(1, 8) * (inv(a0) + inv(a1) + inv(a2) + inv(a3))
        }
        _ => panic!("no closed form for {} parts", a.len()),
    }
}

/// `σ_n(parts; a₀)` summed over the primitive roots numerically.
pub fn sigma_float(n: i64, parts: &[i64], a0: i64) -> f64 {
    let mut total = Complex64::new(0.0, 0.0);
    for j in 1..a0 {
        let lambda = Complex64::from_polar(1.0, 2.0 * PI * j as f64 / a0 as f64);
        let mut term = lambda.powi(n.rem_euclid(a0) as i32);
        for &a in parts {
            term /= Complex64::new(1.0, 0.0) - lambda.powi(a.rem_euclid(a0) as i32);
        }
        total += term;
    }
    (total / a0 as f64).re
}

/// `(1/b) Σ_{k=1}^{b-1} cot(πka/b) cot(πk/b) / 4`, the cotangent form of `s(a, b)`.
pub fn dedekind_cot(a: i64, b: i64) -> f64 {
    let cot = |x: f64| 1.0 / x.tan();
    (1..b).map(|k| cot(PI * (k * a) as f64 / b as f64) * cot(PI * k as f64 / b as f64)).sum::<f64>() / (4 * b) as f64
}

/// Direct enumeration of `k·parts = n`, `k ≥ 0`.
pub fn count_by_enumeration(parts: &[i64], n: i64) -> u64 {
    match parts.split_first() {
        None => (n == 0) as u64,
        Some((&a, rest)) => (0..=n.max(-1) / a).map(|k| count_by_enumeration(rest, n - k * a)).sum(),
    }
}
