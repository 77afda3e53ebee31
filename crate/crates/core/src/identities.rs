//! Residuals `LHS - RHS` for the reciprocity laws. Under each law's
//! hypotheses the residual is exactly zero; a nonzero value says by how much
//! the two sides drifted apart.

use num_integer::Integer;
use serde::Serialize;
use serde_json::json;

use crate::dedekind::{dedekind_naive, knuth_sum, rademacher_sum};
use crate::error::{validation, Result};
use crate::exactcore::{bernoulli2, frac, sawtooth, Rational};
use crate::fouriersums::fourier_dedekind;
use crate::partition::{q_value, PartsTuple};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Law {
    Dedekind,
    Rademacher,
    Gessel,
    General,
    Zagier,
    Raddedsum,
}

impl std::fmt::Display for Law {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Law::Dedekind => "DEDEKIND",
            Law::Rademacher => "RADEMACHER",
            Law::Gessel => "GESSEL",
            Law::General => "GENERAL",
            Law::Zagier => "ZAGIER",
            Law::Raddedsum => "RADDEDSUM",
        };
        f.write_str(name)
    }
}

/// One evaluated residual. Serializes as
/// `{"law", "args", "residual": "p/q", "holds", "in_hypothesis"}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResidualReport {
    pub law: Law,
    pub args: serde_json::Value,
    pub residual: Rational,
    /// `residual == 0`.
    pub holds: bool,
    /// Whether the inputs satisfy the law's stated hypotheses.
    pub in_hypothesis: bool,
}

impl ResidualReport {
    pub fn new(law: Law, args: serde_json::Value, residual: Rational, in_hypothesis: bool) -> Self {
        let holds = residual.is_zero();
        ResidualReport { law, args, residual, holds, in_hypothesis }
    }

    pub fn dedekind(a: i64, b: i64) -> Result<Self> {
        let res = dedekind_residual(a, b)?;
        Ok(Self::new(Law::Dedekind, json!({"a": a, "b": b}), res, true))
    }

    pub fn rademacher(a: i64, b: i64, x: &Rational, y: &Rational) -> Result<Self> {
        let res = rademacher_residual(a, b, x, y)?;
        Ok(Self::new(Law::Rademacher, json!({"a": a, "b": b, "x": x, "y": y}), res, true))
    }

    pub fn gessel(p: i64, q: i64, n: i64) -> Result<Self> {
        let res = gessel_residual(p, q, n)?;
        Ok(Self::new(Law::Gessel, json!({"p": p, "q": q, "n": n}), res, 1 <= n && n <= p + q))
    }

    pub fn general(parts: &PartsTuple, n: i64) -> Result<Self> {
        let res = general_residual(parts, n)?;
        let inside = 0 < n && n < parts.sum();
        Ok(Self::new(Law::General, json!({"parts": parts, "n": n}), res, inside))
    }

    pub fn zagier(parts: &PartsTuple) -> Result<Self> {
        let res = zagier_residual(parts)?;
        Ok(Self::new(Law::Zagier, json!({"parts": parts}), res, true))
    }

    pub fn raddedsum(a: i64, b: i64, n: i64) -> Result<Self> {
        let res = raddedsum_residual(a, b, n)?;
        Ok(Self::new(Law::Raddedsum, json!({"a": a, "b": b, "n": n}), res, true))
    }
}

fn check_coprime_positive(a: i64, b: i64) -> Result<()> {
    if a < 1 || b < 1 {
        return Err(validation(format!("arguments must be positive, got ({a}, {b})")));
    }
    if a.gcd(&b) != 1 {
        return Err(validation(format!("gcd({a}, {b}) != 1")));
    }
    Ok(())
}

fn dedekind_rhs(a: i64, b: i64) -> Rational {
    Rational::new(-1, 4) + (Rational::new(a, b) + Rational::new(1, a * b) + Rational::new(b, a)) / Rational::from(12)
}

/// `s(a,b) + s(b,a) + 1/4 - (a/b + 1/(ab) + b/a)/12`, sums by direct summation.
pub fn dedekind_residual(a: i64, b: i64) -> Result<Rational> {
    check_coprime_positive(a, b)?;
    Ok(dedekind_naive(a, b)? + dedekind_naive(b, a)? - dedekind_rhs(a, b))
}

/// `s(a,b;x,y) + s(b,a;y,x) - ((x))((y)) - ½[(a/b)B₂(y) + (1/(ab))B₂(ay+bx) + (b/a)B₂(x)]`.
///
/// Both `x` and `y` integral is rejected: that is the classical law.
pub fn rademacher_residual(a: i64, b: i64, x: &Rational, y: &Rational) -> Result<Rational> {
    check_coprime_positive(a, b)?;
    if x.is_integer() && y.is_integer() {
        return Err(validation("x and y both integral; use the Dedekind law"));
    }
    let lhs = rademacher_sum(a, b, x, y)? + rademacher_sum(b, a, y, x)?;
    let ay_bx = Rational::from(a) * y + Rational::from(b) * x;
    let bracket = Rational::new(a, b) * bernoulli2(y)
        + Rational::new(1, a * b) * bernoulli2(&ay_bx)
        + Rational::new(b, a) * bernoulli2(x);
    Ok(lhs - sawtooth(x) * sawtooth(y) - bracket / Rational::from(2))
}

/// Right-hand side of Gessel's law, quadratic in `n`.
pub fn gessel_rhs(p: i64, q: i64, n: i64) -> Rational {
    let (pr, qr, pq) = (Rational::from(p), Rational::from(q), Rational::from(p * q));
    let n = Rational::from(n);
    let inv = |x: &Rational| Rational::one() / x;
    -(&n * &n) / (Rational::from(2) * &pq) + &n / Rational::from(2) * (inv(&pr) + inv(&qr) + inv(&pq))
        - (inv(&pr) + inv(&qr) + Rational::one()) / Rational::from(4)
        - (&pr / &qr + inv(&pq) + &qr / &pr) / Rational::from(12)
}

/// `σ_n(q,1; p) + σ_n(p,1; q)` minus Gessel's quadratic. Zero for `1 ≤ n ≤ p+q`;
/// other `n` are evaluated as-is.
pub fn gessel_residual(p: i64, q: i64, n: i64) -> Result<Rational> {
    check_coprime_positive(p, q)?;
    let lhs = fourier_dedekind(n, &[q, 1], p)? + fourier_dedekind(n, &[p, 1], q)?;
    Ok(lhs - gessel_rhs(p, q, n))
}

/// Dedekind reciprocity as read off Gessel's law at `n = p + q`.
///
/// There `σ_{p+q}(q,1; p) = σ₀(q,1; p) - (p-1)/(2p)`, and
/// `s(a,b) = -σ₀(a,1; b) + 1/4 - 1/(4b)`, so the law predicts
/// `s(p,q) + s(q,p) = -G(p+q) - (p-1)/(2p) - (q-1)/(2q) + 1/2 - 1/(4p) - 1/(4q)`
/// with `G` the Gessel right-hand side. Returns `s(p,q) + s(q,p)` minus that.
pub fn gessel_dedekind_residual(p: i64, q: i64) -> Result<Rational> {
    check_coprime_positive(p, q)?;
    let r = Rational::new;
    let predicted = -gessel_rhs(p, q, p + q) - r(p - 1, 2 * p) - r(q - 1, 2 * q) + r(1, 2) - r(1, 4 * p) - r(1, 4 * q);
    Ok(dedekind_naive(p, q)? + dedekind_naive(q, p)? - predicted)
}

/// `Σ_j σ_n(a₀,…,â_j,…,a_d; a_j) + q(a₀,…,a_d, -n)`; zero for `0 < n < Σ a_j`.
pub fn general_residual(parts: &PartsTuple, n: i64) -> Result<Rational> {
    let mut total = q_value(parts, -n)?;
    for (j, &a) in parts.parts().iter().enumerate() {
        total += fourier_dedekind(n, &parts.without(j), a)?;
    }
    Ok(total)
}

/// `Σ_j σ₀(…; a_j) - 1 + q(…, 0)`, always zero for pairwise coprime parts.
pub fn zagier_residual(parts: &PartsTuple) -> Result<Rational> {
    Ok(general_residual(parts, 0)? - Rational::one())
}

/// Knuth's sum minus the convolution-theorem form
/// `-(1/b)Σ_{λ^b=1≠λ} λ^{-n}/((1-λ^a)(1-λ)) - ½{n/b} + 1/4 - 1/(4b)`.
///
/// This form balances when `b | n` but not in general (e.g. `(a, b, n) = (2, 3, 1)`
/// leaves `-1/12`). [`knuth_fourier_residual`] is the identity that holds for all `n`.
pub fn raddedsum_residual(a: i64, b: i64, n: i64) -> Result<Rational> {
    check_coprime_positive(a, b)?;
    let rhs = -fourier_dedekind(-n, &[a, 1], b)? - frac(&Rational::new(n, b)) / Rational::from(2) + Rational::new(1, 4)
        - Rational::new(1, 4 * b);
    Ok(knuth_sum(a, b, n)? - rhs)
}

/// Knuth's sum minus
/// `½((-a⁻¹n/b)) + ½{n/b} - (b-1)/(4b) - σ_{n+1}(a,1; b)`, with `a⁻¹` the
/// inverse of `a` mod `b`. Obtained by expanding `((k/b))` as a finite
/// Fourier series; zero for every integer `n`.
pub fn knuth_fourier_residual(a: i64, b: i64, n: i64) -> Result<Rational> {
    check_coprime_positive(a, b)?;
    let a_inv = a.extended_gcd(&b).x.rem_euclid(b);
    let half = Rational::new(1, 2);
    let rhs = &half * sawtooth(&Rational::new(-a_inv * n, b)) + &half * frac(&Rational::new(n, b))
        - Rational::new(b - 1, 4 * b)
        - fourier_dedekind(n + 1, &[a, 1], b)?;
    Ok(knuth_sum(a, b, n)? - rhs)
}
