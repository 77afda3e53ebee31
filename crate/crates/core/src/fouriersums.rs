//! Fourier-Dedekind sums and Zagier's higher-dimensional Dedekind sums.
//!
//! Both are averages over the nontrivial a₀-th roots of unity of a product of
//! factors `1/(1 - λ^a)`. Each factor has an exact representative in the
//! group algebra of ℤ/a₀ ([`unit_fraction_vector`]); multiplying the factors
//! is cyclic convolution, averaging over *all* roots picks out one
//! coefficient, and the λ = 1 term is subtracted algebraically.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{validation, Result};
use crate::exactcore::{unit_fraction_vector, CycVec, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FourierArgs {
    pub n: i64,
    pub parts: Vec<i64>,
    pub modulus: i64,
}

impl FourierArgs {
    pub fn new(n: i64, parts: Vec<i64>, modulus: i64) -> Result<Self> {
        check_coprime_to(&parts, modulus)?;
        Ok(FourierArgs { n, parts, modulus })
    }

    pub fn evaluate(&self) -> Result<Rational> {
        fourier_dedekind(self.n, &self.parts, self.modulus)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZagierArgs {
    pub modulus: i64,
    pub parts: Vec<i64>,
}

impl ZagierArgs {
    pub fn new(modulus: i64, parts: Vec<i64>) -> Result<Self> {
        check_coprime_to(&parts, modulus)?;
        Ok(ZagierArgs { modulus, parts })
    }

    pub fn evaluate(&self) -> Result<Rational> {
        zagier_sum(self.modulus, &self.parts)
    }
}

fn check_coprime_to(parts: &[i64], modulus: i64) -> Result<()> {
    if modulus <= 0 {
        return Err(validation(format!("modulus must be positive, got {modulus}")));
    }
    if let Some(a) = parts.iter().find(|a| a.gcd(&modulus) != 1) {
        return Err(validation(format!("gcd({a}, {modulus}) != 1")));
    }
    Ok(())
}

/// The function `n ↦ σ_n(parts; a₀)` for fixed parts and modulus.
///
/// Holds the convolved kernel `g = ⊛_i unit_fraction_vector(a_i, a₀)`, so
/// every `σ_n` afterwards is a single coefficient lookup.
#[derive(Clone, Debug)]
pub struct FourierDedekind {
    kernel: CycVec,
    /// `(1/a₀)·g(1)`, the λ = 1 contribution removed from every value.
    trivial: Rational,
}

impl FourierDedekind {
    pub fn new(parts: &[i64], modulus: i64) -> Result<Self> {
        check_coprime_to(parts, modulus)?;
        let mut kernel = match parts.first() {
            Some(&a) => unit_fraction_vector(a, modulus)?,
            None => CycVec::delta(modulus as usize, 0)?,
        };
        for &a in parts.iter().skip(1) {
            kernel = kernel.convolve(&unit_fraction_vector(a, modulus)?)?;
        }
        let trivial = kernel.value_at_one() / Rational::from(modulus);
        Ok(FourierDedekind { kernel, trivial })
    }

    pub fn modulus(&self) -> i64 {
        self.kernel.modulus() as i64
    }

    /// `σ_n`; periodic in `n` with period a₀.
    pub fn sigma(&self, n: i64) -> Rational {
        self.kernel.coeff(-n) - &self.trivial
    }
}

/// `σ_n(a₁,…,a_d; a₀) = (1/a₀) Σ_{λ^{a₀}=1, λ≠1} λⁿ / Π(1 - λ^{a_i})`.
///
/// Requires `gcd(a_i, a₀) = 1`. The empty parts list is allowed and gives
/// `(a₀·[a₀ | n] - 1)/a₀`.
pub fn fourier_dedekind(n: i64, parts: &[i64], modulus: i64) -> Result<Rational> {
    check_coprime_to(parts, modulus)?;
    let Some((last, rest)) = parts.split_last() else {
        return FourierDedekind::new(parts, modulus).map(|f| f.sigma(n));
    };
    // Only one coefficient of the final product is needed.
    let head = FourierDedekind::new(rest, modulus)?;
    let last_vec = unit_fraction_vector(*last, modulus)?;
    let average = head.kernel.convolve_at(&last_vec, -n)?;
    let at_one = head.kernel.value_at_one() * last_vec.value_at_one() / Rational::from(modulus);
    Ok(average - at_one)
}

/// Zagier's `s(a₀; a₁,…,a_d) = (1/a₀) Σ_{λ^{a₀}=1≠λ} Π (λ^{a_j}+1)/(λ^{a_j}-1)`.
///
/// Each factor equals `1 - 2/(1 - λ^a)`, represented by `δ₀ - 2·u_a`, and
/// takes the value `a₀` at λ = 1.
pub fn zagier_sum(modulus: i64, parts: &[i64]) -> Result<Rational> {
    check_coprime_to(parts, modulus)?;
    let m = modulus as usize;
    let delta = CycVec::delta(m, 0)?;
    let minus_two = Rational::from(-2);
    let mut h = delta.clone();
    for &a in parts {
        let factor = delta.checked_add(&unit_fraction_vector(a, modulus)?.scaled(&minus_two))?;
        h = h.convolve(&factor)?;
    }
    let at_one = Rational::from(modulus).pow(parts.len() as i32 - 1)?;
    Ok(h.coeff(0) - at_one)
}

/// `s(a, b) = -(1/4)·s(b; a, 1)`, the cotangent form of the classical sum.
pub fn dedekind_via_zagier(a: i64, b: i64) -> Result<Rational> {
    Ok(zagier_sum(b, &[a, 1])? * Rational::new(-1, 4))
}
