//! Exact arithmetic substrate: rationals, the sawtooth and periodized
//! Bernoulli functions, cyclic group-algebra vectors and truncated series.

mod cyclic;
mod rational;
mod series;

pub use cyclic::{cyc_convolve, unit_fraction_vector, CycVec};
pub use rational::Rational;
pub use series::{binom_series, series_inv, series_mul, TruncSeries};

/// Fractional part `x - ⌊x⌋ ∈ [0, 1)`.
pub fn frac(x: &Rational) -> Rational {
    x.fract()
}

/// The sawtooth `((x))`: `{x} - 1/2` off the integers, `0` on them.
pub fn sawtooth(x: &Rational) -> Rational {
    if x.is_integer() {
        Rational::zero()
    } else {
        x.fract() - Rational::new(1, 2)
    }
}

/// Periodized second Bernoulli polynomial `{x}² - {x} + 1/6`.
pub fn bernoulli2(x: &Rational) -> Rational {
    let f = x.fract();
    &f * &f - &f + Rational::new(1, 6)
}
