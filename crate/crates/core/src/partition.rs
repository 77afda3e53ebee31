//! The coin-exchange problem: counting nonnegative solutions of
//! `k₀a₀ + … + k_d a_d = n`.
//!
//! [`partition_count`] is plain dynamic programming and serves as the oracle.
//! [`partition_formula`] evaluates the closed form
//!
//! ```text
//! p(n) = q(a₀,…,a_d, n) + Σ_j σ_{-n}(a₀,…,â_j,…,a_d; a_j)
//! ```
//!
//! where `q` collects the Laurent coefficients at `z = 1` of
//! `z^{-n} Π 1/(1 - z^{a_i})`. The two share no code.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{validation, Error, Result};
use crate::exactcore::{binom_series, Rational, TruncSeries};
use crate::fouriersums::FourierDedekind;

/// Pairwise-coprime positive parts `(a₀,…,a_d)`, `d ≥ 0`. Repeated 1s are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct PartsTuple(Vec<i64>);

impl PartsTuple {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(validation("parts tuple must be nonempty"));
        }
        if let Some(a) = parts.iter().find(|&&a| a < 1) {
            return Err(validation(format!("parts must be positive, got {a}")));
        }
        for (i, a) in parts.iter().enumerate() {
            for b in &parts[i + 1..] {
                if a.gcd(b) != 1 {
                    return Err(validation(format!("parts {a} and {b} are not coprime")));
                }
            }
        }
        Ok(PartsTuple(parts))
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    /// `d`, one less than the number of parts.
    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn product(&self) -> BigInt {
        self.0.iter().map(|&a| BigInt::from(a)).product()
    }

    /// All parts except the `j`-th.
    pub fn without(&self, j: usize) -> Vec<i64> {
        let mut rest = self.0.clone();
        rest.remove(j);
        rest
    }
}

impl std::fmt::Display for PartsTuple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let strs: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "{{{}}}", strs.join(","))
    }
}

/// `p_A(n)` for every `n` in `0..=n_max`.
pub fn partition_counts(parts: &PartsTuple, n_max: usize) -> Vec<BigUint> {
    let mut table = vec![BigUint::zero(); n_max + 1];
    table[0] = BigUint::from(1u32);
    for &a in parts.parts() {
        let a = a as usize;
        for n in a..=n_max {
            let (lo, hi) = table.split_at_mut(n);
            hi[0] += &lo[n - a];
        }
    }
    table
}

/// Number of `(k₀,…,k_d) ≥ 0` with `Σ k_j a_j = n`; zero for negative `n`.
pub fn partition_count(parts: &PartsTuple, n: i64) -> BigUint {
    if n < 0 {
        return BigUint::zero();
    }
    partition_counts(parts, n as usize).pop().unwrap_or_default()
}

/// Solutions with every `k_j ≥ 1`.
pub fn interior_count(parts: &PartsTuple, n: i64) -> BigUint {
    partition_count(parts, n - parts.sum())
}

/// The `n`-independent part of the Laurent expansion at `z = 1`.
///
/// With `z = 1 + t`, `1/(1 - z^a) = -1/(a·t) · H_a(t)^{-1}` where
/// `H_a(t) = Σ_k binom(a, k+1)/a · t^k`. So `f(z) = t^{-(d+1)} G(t)` with
/// `G(t) = (1+t)^{-n} · kernel(t)`, and `B_k` is the coefficient of
/// `t^{d+1-k}` in `G`.
#[derive(Clone, Debug)]
struct QKernel {
    dim: usize,
    kernel: TruncSeries,
}

impl QKernel {
    fn new(parts: &PartsTuple) -> Result<Self> {
        let dim = parts.dim();
        let sign = if dim.is_multiple_of(2) { -1 } else { 1 };
        let mut kernel = TruncSeries::constant(Rational::new(sign, parts.product()), dim);
        for &a in parts.parts() {
            let binoms = binom_series(a, dim + 1);
            let h = TruncSeries::new(binoms.coeffs()[1..].iter().map(|c| c / Rational::from(a)).collect());
            kernel = kernel.mul(&h.inv()?);
        }
        Ok(QKernel { dim, kernel })
    }

    fn value(&self, n: i64) -> Rational {
        let g = self.kernel.mul(&binom_series(-n, self.dim));
        (1..=self.dim + 1)
            .map(|k| {
                let b_k = g.coeff(self.dim + 1 - k);
                if k % 2 == 0 {
                    b_k
                } else {
                    -b_k
                }
            })
            .sum()
    }
}

/// `q(a₀,…,a_d, n) = Σ_{k=1}^{d+1} (-1)^k B_k`, defined for every integer `n`.
pub fn q_value(parts: &PartsTuple, n: i64) -> Result<Rational> {
    Ok(QKernel::new(parts)?.value(n))
}

/// Coefficients of `n⁰ … n^d` of the polynomial `n ↦ q(…, n)`.
///
/// Interpolated through `n = 0..=d` and then checked against `q_value` at
/// `d + 1` further points.
pub fn q_polynomial(parts: &PartsTuple) -> Result<Vec<Rational>> {
    let kernel = QKernel::new(parts)?;
    let d = parts.dim();
    let xs: Vec<i64> = (0..=d as i64).collect();
    let ys: Vec<Rational> = xs.iter().map(|&x| kernel.value(x)).collect();
    let poly = interpolate(&xs, &ys);
    for n in (d as i64 + 1)..=(2 * d as i64 + 1) {
        if eval_poly(&poly, n) != kernel.value(n) {
            return Err(Error::InternalInconsistency(format!(
                "q for {parts} is not a polynomial of degree {d} at n = {n}"
            )));
        }
    }
    Ok(poly)
}

fn interpolate(xs: &[i64], ys: &[Rational]) -> Vec<Rational> {
    let mut poly = vec![Rational::zero(); xs.len()];
    for (i, (&xi, yi)) in xs.iter().zip(ys).enumerate() {
        // basis = Π_{j≠i} (x - x_j) / (x_i - x_j), built low to high
        let mut basis = vec![Rational::one()];
        let mut denom = Rational::one();
        for (j, &xj) in xs.iter().enumerate() {
            if j == i {
                continue;
            }
            let mut next = vec![Rational::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * Rational::from(xj);
            }
            basis = next;
            denom *= &Rational::from(xi - xj);
        }
        let scale = yi / denom;
        for (p, c) in poly.iter_mut().zip(&basis) {
            *p += c * &scale;
        }
    }
    poly
}

pub(crate) fn eval_poly(coeffs: &[Rational], n: i64) -> Rational {
    let x = Rational::from(n);
    coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * &x + c)
}

/// Precomputed closed form for one parts tuple, for evaluating many `n`.
///
/// The q polynomial and the tables `σ_r(…; a_j)`, `r mod a_j`, are scaled
/// to a common denominator `L`, so each evaluation is integer arithmetic
/// followed by one exact division check.
#[derive(Clone, Debug)]
pub struct PartitionFormula {
    parts: PartsTuple,
    scale: BigInt,
    /// `L·q` coefficients of `n⁰ … n^d`.
    poly: Vec<BigInt>,
    /// `(a_j, [L·σ_r(…; a_j) for r in 0..a_j])`.
    tables: Vec<(i64, Vec<BigInt>)>,
}

impl PartitionFormula {
    pub fn new(parts: &PartsTuple) -> Result<Self> {
        let q = q_polynomial(parts)?;
        let mut raw_tables = Vec::with_capacity(parts.parts().len());
        for (j, &a) in parts.parts().iter().enumerate() {
            let sigma = FourierDedekind::new(&parts.without(j), a)?;
            raw_tables.push((a, (0..a).map(|r| sigma.sigma(r)).collect::<Vec<_>>()));
        }
        let scale =
            q.iter().chain(raw_tables.iter().flat_map(|(_, t)| t)).fold(BigInt::from(1), |l, c| l.lcm(c.denom()));
        let scaled = |c: &Rational| c.numer() * (&scale / c.denom());
        let poly = q.iter().map(scaled).collect();
        let tables = raw_tables.iter().map(|(a, t)| (*a, t.iter().map(scaled).collect())).collect();
        Ok(PartitionFormula { parts: parts.clone(), scale, poly, tables })
    }

    /// `L·(q(…, m) + Σ_j σ_{-m}(…; a_j))`.
    fn scaled_value(&self, m: i64) -> BigInt {
        let x = BigInt::from(m);
        let poly = self.poly.iter().rev().fold(BigInt::zero(), |acc, c| acc * &x + c);
        self.tables.iter().fold(poly, |acc, (a, t)| acc + &t[(-m).rem_euclid(*a) as usize])
    }

    /// `q(…, n) + Σ_j σ_{-n}(…; a_j)` as an unchecked rational.
    pub fn raw(&self, n: i64) -> Rational {
        Rational::new(self.scaled_value(n), self.scale.clone())
    }

    /// `q(…, -n) + Σ_j σ_n(…; a_j)`, the interior count up to the sign `(-1)^d`.
    pub fn raw_reflected(&self, n: i64) -> Rational {
        Rational::new(self.scaled_value(-n), self.scale.clone())
    }

    pub fn count(&self, n: i64) -> Result<BigInt> {
        if n < 0 {
            return Err(validation(format!("partition_formula needs n >= 0, got {n}")));
        }
        self.divide(self.scaled_value(n), n)
    }

    pub fn interior(&self, n: i64) -> Result<BigInt> {
        if n < 1 {
            return Err(validation(format!("interior_formula needs n >= 1, got {n}")));
        }
        let v = self.scaled_value(-n);
        self.divide(if self.parts.dim().is_multiple_of(2) { v } else { -v }, n)
    }

    fn divide(&self, v: BigInt, n: i64) -> Result<BigInt> {
        let (quot, rem) = v.div_rem(&self.scale);
        if !rem.is_zero() {
            let v = Rational::new(v, self.scale.clone());
            return Err(Error::InternalInconsistency(format!(
                "formula for {} at n = {n} gave non-integer {v}",
                self.parts
            )));
        }
        Ok(quot)
    }
}

fn integral(v: Rational, parts: &PartsTuple, n: i64) -> Result<BigInt> {
    v.to_integer()
        .ok_or_else(|| Error::InternalInconsistency(format!("formula for {parts} at n = {n} gave non-integer {v}")))
}

/// Closed-form count `q(…, n) + Σ_j σ_{-n}(a₀,…,â_j,…,a_d; a_j)`, `n ≥ 0`.
///
/// Fails with [`Error::InternalInconsistency`] if the value is not an integer.
pub fn partition_formula(parts: &PartsTuple, n: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(validation(format!("partition_formula needs n >= 0, got {n}")));
    }
    let sigmas = (0..parts.parts().len())
        .map(|j| crate::fouriersums::fourier_dedekind(-n, &parts.without(j), parts.parts()[j]))
        .sum::<Result<Rational>>()?;
    integral(q_value(parts, n)? + sigmas, parts, n)
}

/// Interior count via reciprocity: `(-1)^d (q(…, -n) + Σ_j σ_n(…; a_j))`, `n ≥ 1`.
pub fn interior_formula(parts: &PartsTuple, n: i64) -> Result<BigInt> {
    if n < 1 {
        return Err(validation(format!("interior_formula needs n >= 1, got {n}")));
    }
    let sigmas = (0..parts.parts().len())
        .map(|j| crate::fouriersums::fourier_dedekind(n, &parts.without(j), parts.parts()[j]))
        .sum::<Result<Rational>>()?;
    let v = q_value(parts, -n)? + sigmas;
    let v = if parts.dim().is_multiple_of(2) { v } else { -v };
    integral(v, parts, n)
}

/// `n ↦ table[n mod modulus]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodicTable {
    pub modulus: i64,
    pub values: Vec<Rational>,
}

impl PeriodicTable {
    pub fn at(&self, n: i64) -> &Rational {
        &self.values[n.rem_euclid(self.modulus) as usize]
    }
}

/// `p_A(n)` as polynomial part plus periodic corrections.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuasiPolynomial {
    pub parts: PartsTuple,
    /// Coefficients of `n⁰ … n^d`.
    pub poly: Vec<Rational>,
    /// One table per part `a_j > 1`: `values[r] = σ_{-r}(…; a_j)`.
    pub tables: Vec<PeriodicTable>,
}

impl QuasiPolynomial {
    pub fn eval(&self, n: i64) -> Rational {
        eval_poly(&self.poly, n) + self.tables.iter().map(|t| t.at(n)).sum::<Rational>()
    }
}

pub fn emit_quasipolynomial(parts: &PartsTuple) -> Result<QuasiPolynomial> {
    let poly = q_polynomial(parts)?;
    let mut tables = Vec::new();
    for (j, &a) in parts.parts().iter().enumerate() {
        if a == 1 {
            continue;
        }
        let sigma = FourierDedekind::new(&parts.without(j), a)?;
        tables.push(PeriodicTable { modulus: a, values: (0..a).map(|r| sigma.sigma(-r)).collect() });
    }
    Ok(QuasiPolynomial { parts: parts.clone(), poly, tables })
}

/// Converts a count to `BigInt` for comparison with formula output.
pub fn count_as_int(c: &BigUint) -> BigInt {
    BigInt::from(c.clone())
}
