use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{validation, Result};

/// An element of the rational group algebra of ℤ/m.
///
/// Read as the function `λ ↦ Σ_j coeff(j)·λ^j` on the m-th roots of unity,
/// cyclic convolution is pointwise multiplication of those functions. This is
/// the exact stand-in for every root-of-unity sum in the crate.
///
/// Coefficients are kept as integer numerators over one shared positive
/// denominator, reduced so the numerators and denominator have no common
/// factor. Two vectors are equal iff their coefficients are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycVec {
    nums: Vec<BigInt>,
    den: BigInt,
}

impl CycVec {
    /// Builds a vector from its coefficients; the modulus is their count.
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(validation("CycVec modulus must be positive"));
        }
        let den = coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let nums = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        Ok(CycVec::from_parts(nums, den))
    }

    fn from_parts(nums: Vec<BigInt>, den: BigInt) -> Self {
        debug_assert!(den.is_positive());
        let mut v = CycVec { nums, den };
        v.normalize();
        v
    }

    fn normalize(&mut self) {
        let mut g = self.den.clone();
        for n in &self.nums {
            if g.is_one() {
                return;
            }
            if !n.is_zero() {
                g = g.gcd(n);
            }
        }
        if self.nums.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        if !g.is_one() {
            for n in &mut self.nums {
                *n /= &g;
            }
            self.den /= &g;
        }
    }

    /// The unit vector with a single `1` at `index mod m`.
    pub fn delta(modulus: usize, index: i64) -> Result<Self> {
        if modulus == 0 {
            return Err(validation("CycVec modulus must be positive"));
        }
        let mut nums = vec![BigInt::zero(); modulus];
        nums[residue(index, modulus)] = BigInt::one();
        Ok(CycVec { nums, den: BigInt::one() })
    }

    pub fn zero(modulus: usize) -> Result<Self> {
        if modulus == 0 {
            return Err(validation("CycVec modulus must be positive"));
        }
        Ok(CycVec { nums: vec![BigInt::zero(); modulus], den: BigInt::one() })
    }

    pub fn modulus(&self) -> usize {
        self.nums.len()
    }

    pub fn coeff(&self, index: i64) -> Rational {
        Rational::new(self.nums[residue(index, self.modulus())].clone(), self.den.clone())
    }

    pub fn coeffs(&self) -> Vec<Rational> {
        self.nums.iter().map(|n| Rational::new(n.clone(), self.den.clone())).collect()
    }

    /// Value of the represented function at λ = 1, i.e. the coefficient sum.
    pub fn value_at_one(&self) -> Rational {
        Rational::new(self.nums.iter().sum::<BigInt>(), self.den.clone())
    }

    pub fn scaled(&self, factor: &Rational) -> CycVec {
        let nums = self.nums.iter().map(|n| n * factor.numer()).collect();
        CycVec::from_parts(nums, &self.den * factor.denom())
    }

    pub fn checked_add(&self, other: &CycVec) -> Result<CycVec> {
        self.check_modulus(other)?;
        let nums = self.nums.iter().zip(&other.nums).map(|(a, b)| a * &other.den + b * &self.den).collect();
        Ok(CycVec::from_parts(nums, &self.den * &other.den))
    }

    pub fn checked_sub(&self, other: &CycVec) -> Result<CycVec> {
        self.checked_add(&other.scaled(&Rational::from(-1)))
    }

    fn check_modulus(&self, other: &CycVec) -> Result<()> {
        if self.modulus() != other.modulus() {
            return Err(validation(format!("modulus mismatch: {} vs {}", self.modulus(), other.modulus())));
        }
        Ok(())
    }

    /// Exact cyclic convolution, direct O(m²).
    pub fn convolve(&self, other: &CycVec) -> Result<CycVec> {
        self.check_modulus(other)?;
        let m = self.modulus();
        let mut out = vec![BigInt::zero(); m];
        for (i, u) in self.nums.iter().enumerate() {
            if u.is_zero() {
                continue;
            }
            for (j, v) in other.nums.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                let k = if i + j >= m { i + j - m } else { i + j };
                out[k] += u * v;
            }
        }
        Ok(CycVec::from_parts(out, &self.den * &other.den))
    }

    /// A single coefficient of `self ⊛ other`, in O(m).
    pub fn convolve_at(&self, other: &CycVec, index: i64) -> Result<Rational> {
        self.check_modulus(other)?;
        let m = self.modulus();
        let k = residue(index, m);
        let mut acc = BigInt::zero();
        for (i, u) in self.nums.iter().enumerate() {
            if u.is_zero() {
                continue;
            }
            let j = if k >= i { k - i } else { k + m - i };
            acc += u * &other.nums[j];
        }
        Ok(Rational::new(acc, &self.den * &other.den))
    }
}

impl std::fmt::Debug for CycVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.coeffs()).finish()
    }
}

fn residue(index: i64, modulus: usize) -> usize {
    index.rem_euclid(modulus as i64) as usize
}

/// Exact representative of `λ ↦ 1/(1 - λ^a)` on the nontrivial m-th roots
/// of unity: `v[(k·a) mod m] = -k/m` for `k = 0..m`.
///
/// Follows from `Σ_k k·μ^k = m/(μ - 1)` for `μ^m = 1 ≠ μ`, with `μ = λ^a`.
/// At λ = 1 the vector evaluates to `-(m-1)/2`.
pub fn unit_fraction_vector(a: i64, m: i64) -> Result<CycVec> {
    if m <= 0 {
        return Err(validation(format!("modulus must be positive, got {m}")));
    }
    if a.gcd(&m) != 1 {
        return Err(validation(format!("gcd({a}, {m}) != 1")));
    }
    let mu = m as usize;
    let mut nums = vec![BigInt::zero(); mu];
    let step = a.rem_euclid(m) as usize;
    let mut idx = 0usize;
    for k in 0..mu {
        nums[idx] = BigInt::from(-(k as i64));
        idx = (idx + step) % mu;
    }
    Ok(CycVec::from_parts(nums, BigInt::from(m)))
}

/// Free-function form of [`CycVec::convolve`].
pub fn cyc_convolve(u: &CycVec, v: &CycVec) -> Result<CycVec> {
    u.convolve(v)
}
