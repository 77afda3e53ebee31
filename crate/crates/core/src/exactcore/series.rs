use num_bigint::BigInt;

use super::Rational;
use crate::error::{Error, Result};

/// A power series `Σ_{k=0}^{N} c_k t^k` truncated after `t^N`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncSeries {
    coeffs: Vec<Rational>,
}

impl TruncSeries {
    /// Coefficients of `t^0 ..= t^N`; an empty vector is the zero series of order 0.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        TruncSeries { coeffs }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order + 1];
        coeffs[0] = c;
        TruncSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scaled(&self, factor: &Rational) -> TruncSeries {
        TruncSeries { coeffs: self.coeffs.iter().map(|c| c * factor).collect() }
    }

    /// Product, truncated to the smaller of the two orders.
    pub fn mul(&self, other: &TruncSeries) -> TruncSeries {
        let n = self.order().min(other.order());
        let coeffs = (0..=n).map(|k| (0..=k).map(|i| &self.coeffs[i] * &other.coeffs[k - i]).sum()).collect();
        TruncSeries { coeffs }
    }

    /// Multiplicative inverse to the same order. The constant term must be nonzero.
    pub fn inv(&self) -> Result<TruncSeries> {
        let c0 = &self.coeffs[0];
        let c0_inv = c0.recip().map_err(|_| Error::Singularity("series inverse with zero constant term".into()))?;
        let n = self.order();
        let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
        out.push(c0_inv.clone());
        for k in 1..=n {
            let acc: Rational = (1..=k).map(|i| &self.coeffs[i] * &out[k - i]).sum();
            out.push(-(acc * &c0_inv));
        }
        Ok(TruncSeries { coeffs: out })
    }
}

pub fn series_mul(a: &TruncSeries, b: &TruncSeries) -> TruncSeries {
    a.mul(b)
}

pub fn series_inv(a: &TruncSeries) -> Result<TruncSeries> {
    a.inv()
}

/// `(1 + t)^n` to order `order`, for any integer `n` (negative included):
/// the coefficient of `t^k` is `n(n-1)…(n-k+1)/k!`.
pub fn binom_series(n: impl Into<BigInt>, order: usize) -> TruncSeries {
    let n = Rational::from_integer(n.into());
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut c = Rational::one();
    coeffs.push(c.clone());
    for k in 1..=order {
        c = c * (&n - Rational::from(k as i64 - 1)) / Rational::from(k as i64);
        coeffs.push(c.clone());
    }
    TruncSeries { coeffs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn binomials() {
        assert_eq!(binom_series(2, 3).coeffs(), ints(&[1, 2, 1, 0]).as_slice());
        assert_eq!(binom_series(-1, 2).coeffs(), ints(&[1, -1, 1]).as_slice());
        assert_eq!(binom_series(0, 2).coeffs(), ints(&[1, 0, 0]).as_slice());
        assert_eq!(binom_series(-3, 3).coeffs(), ints(&[1, -3, 6, -10]).as_slice());
    }

    #[test]
    fn inverse_of_one_plus_t() {
        let a = TruncSeries::new(ints(&[1, 1, 0]));
        assert_eq!(a.inv().unwrap().coeffs(), ints(&[1, -1, 1]).as_slice());
    }

    #[test]
    fn inverse_needs_constant_term() {
        let a = TruncSeries::new(ints(&[0, 1]));
        assert!(matches!(series_inv(&a), Err(Error::Singularity(_))));
    }

    #[test]
    fn truncation_to_smaller_order() {
        let a = binom_series(1, 1);
        let b = binom_series(1, 4);
        assert_eq!(series_mul(&a, &b).coeffs(), ints(&[1, 2]).as_slice());
    }

    #[test]
    fn binomial_exponents_add() {
        for n in -6..6i64 {
            for m in -6..6i64 {
                assert_eq!(binom_series(n, 5).mul(&binom_series(m, 5)), binom_series(n + m, 5));
            }
        }
    }

    proptest! {
        #[test]
        fn series_times_inverse_is_one(
            c0 in (1i64..9).prop_flat_map(|n| prop_oneof![Just(n), Just(-n)]),
            rest in prop::collection::vec((-9i64..9, 1i64..7), 0..6),
        ) {
            let mut coeffs = vec![Rational::from(c0)];
            coeffs.extend(rest.into_iter().map(|(n, d)| Rational::new(n, d)));
            let a = TruncSeries::new(coeffs);
            let one = TruncSeries::constant(Rational::one(), a.order());
            prop_assert_eq!(a.mul(&a.inv().unwrap()), one);
        }
    }
}
