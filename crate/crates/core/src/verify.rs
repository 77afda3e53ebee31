//! Verification sweeps over parameter grids.
//!
//! Every suite evaluates one law or formula over a grid sized by `max` and
//! collects the cases that fail. Cases are evaluated in parallel but reported
//! in grid order, and randomized grids come from a seeded ChaCha stream, so a
//! report depends only on `(suite, max, seed)`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cone2d::{decompose, series_verify, Cone2};
use crate::error::{validation, Error, Result};
use crate::exactcore::Rational;
use crate::fouriersums::zagier_sum;
use crate::identities::ResidualReport;
use crate::partition::{count_as_int, emit_quasipolynomial, partition_counts, PartitionFormula, PartsTuple};

/// Failure records kept per report; the total is always counted.
pub const MAX_RECORDED_FAILURES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Dedekind,
    Rademacher,
    Gessel,
    General,
    Zagier,
    Raddedsum,
    Main,
    Ehrhart,
    Cone2d,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Dedekind,
        Suite::Rademacher,
        Suite::Gessel,
        Suite::General,
        Suite::Zagier,
        Suite::Raddedsum,
        Suite::Main,
        Suite::Ehrhart,
        Suite::Cone2d,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Dedekind => "dedekind",
            Suite::Rademacher => "rademacher",
            Suite::Gessel => "gessel",
            Suite::General => "general",
            Suite::Zagier => "zagier",
            Suite::Raddedsum => "raddedsum",
            Suite::Main => "main",
            Suite::Ehrhart => "ehrhart",
            Suite::Cone2d => "cone2d",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|suite| suite.name() == s).ok_or_else(|| validation(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub max: u64,
    pub seed: u64,
    pub checked: usize,
    pub failed: usize,
    /// The first [`MAX_RECORDED_FAILURES`] failing cases, in grid order.
    pub failures: Vec<Value>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    fn from_outcomes(suite: Suite, max: u64, seed: u64, outcomes: Vec<Outcome>) -> Self {
        let mut report = SuiteReport { suite, max, seed, checked: 0, failed: 0, failures: Vec::new() };
        for o in outcomes {
            report.checked += o.checked;
            report.failed += o.failures.len();
            let room = MAX_RECORDED_FAILURES - report.failures.len();
            report.failures.extend(o.failures.into_iter().take(room));
        }
        report
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} checked, {} failures (max {}, seed {})",
            self.suite, self.checked, self.failed, self.max, self.seed
        )
    }
}

/// Result of checking one grid cell, which may cover several cases.
#[derive(Default)]
struct Outcome {
    checked: usize,
    failures: Vec<Value>,
}

impl Outcome {
    fn single(result: Result<ResidualReport>, case: Value) -> Self {
        let failures = match result {
            Ok(r) if r.holds => vec![],
            Ok(r) => vec![serde_json::to_value(r).expect("report serializes")],
            Err(e) => vec![json!({"case": case, "error": e.to_string()})],
        };
        Outcome { checked: 1, failures }
    }

    fn merge(mut self, other: Outcome) -> Self {
        self.checked += other.checked;
        self.failures.extend(other.failures);
        self
    }
}

fn sweep<T: Sync>(cells: &[T], check: impl Fn(&T) -> Outcome + Sync + Send) -> Vec<Outcome> {
    cells.par_iter().map(check).collect()
}

/// Coprime pairs `(a, b)` with `1 ≤ a, b ≤ max`, lexicographic.
pub fn coprime_pairs(max: i64) -> Vec<(i64, i64)> {
    (1..=max).flat_map(|a| (1..=max).map(move |b| (a, b))).filter(|(a, b)| a.gcd(b) == 1).collect()
}

/// Pairwise-coprime multisets of parts in `1..=max_part` with between 1 and
/// `max_len` elements, as nondecreasing tuples.
pub fn coprime_tuples(max_part: i64, max_len: usize) -> Vec<PartsTuple> {
    fn extend(prefix: &mut Vec<i64>, max_part: i64, max_len: usize, out: &mut Vec<PartsTuple>) {
        let start = prefix.last().copied().unwrap_or(1);
        for a in start..=max_part {
            if prefix.iter().all(|p| p.gcd(&a) == 1) {
                prefix.push(a);
                out.push(PartsTuple::new(prefix.clone()).expect("coprime by construction"));
                if prefix.len() < max_len {
                    extend(prefix, max_part, max_len, out);
                }
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), max_part, max_len, &mut out);
    out
}

/// Pairwise-coprime nondecreasing tuples of 1 to `max_len` parts with
/// product at most `max_product`.
pub fn coprime_tuples_by_product(max_product: i64, max_len: usize) -> Vec<PartsTuple> {
    fn extend(prefix: &mut Vec<i64>, room: i64, max_len: usize, out: &mut Vec<PartsTuple>) {
        let start = prefix.last().copied().unwrap_or(1);
        for a in start..=room {
            if prefix.iter().all(|p| p.gcd(&a) == 1) {
                prefix.push(a);
                out.push(PartsTuple::new(prefix.clone()).expect("coprime by construction"));
                if prefix.len() < max_len {
                    extend(prefix, room / a, max_len, out);
                }
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), max_product, max_len, &mut out);
    out
}

fn random_rational(rng: &mut ChaCha8Rng, max_den: i64) -> Rational {
    let den = rng.gen_range(1..=max_den);
    Rational::new(rng.gen_range(-2 * den..=2 * den), den)
}

/// `n` instances with coprime `a, b ≤ max` and shifts of denominator at
/// most 20, not both integral.
pub fn rademacher_cases(max: i64, n: usize, seed: u64) -> Vec<(i64, i64, Rational, Rational)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = Vec::with_capacity(n);
    while cases.len() < n {
        let (a, b) = (rng.gen_range(1..=max), rng.gen_range(1..=max));
        let (x, y) = (random_rational(&mut rng, 20), random_rational(&mut rng, 20));
        if a.gcd(&b) == 1 && !(x.is_integer() && y.is_integer()) {
            cases.push((a, b, x, y));
        }
    }
    cases
}

/// `n` cones with generator entries in `[-100, 100]` and index at most `max_index`.
pub fn random_cones(n: usize, max_index: u64, seed: u64) -> Vec<Cone2> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cones = Vec::with_capacity(n);
    while cones.len() < n {
        let u = [rng.gen_range(-100..=100), rng.gen_range(-100..=100)];
        let w = [rng.gen_range(-100..=100), rng.gen_range(-100..=100)];
        if let Ok(c) = Cone2::new(u, w) {
            if c.index() <= max_index {
                cones.push(c);
            }
        }
    }
    cones
}

/// Largest admissible number of terms for a cone of the given index.
pub fn cone_term_bound(index: u64) -> f64 {
    4.0 * (1.0 + (index as f64).log2())
}

/// `partition_formula` and `interior_formula` against the DP counts for
/// `0 ≤ n ≤ n_max` (`1 ≤ n` for the interior), one tuple per cell.
fn check_counts(parts: &PartsTuple, n_max: i64, interior: bool) -> Outcome {
    let formula = match PartitionFormula::new(parts) {
        Ok(f) => f,
        Err(e) => return Outcome { checked: 1, failures: vec![json!({"parts": parts, "error": e.to_string()})] },
    };
    let counts = partition_counts(parts, n_max as usize);
    let sum = parts.sum();
    let mut out = Outcome::default();
    let first = if interior { 1 } else { 0 };
    for n in first..=n_max {
        let (got, want) = if interior {
            let want = if n >= sum { count_as_int(&counts[(n - sum) as usize]) } else { 0.into() };
            (formula.interior(n), want)
        } else {
            (formula.count(n), count_as_int(&counts[n as usize]))
        };
        out.checked += 1;
        match got {
            Ok(v) if v == want => {}
            Ok(v) => {
                out.failures.push(json!({"parts": parts, "n": n, "formula": v.to_string(), "count": want.to_string()}))
            }
            Err(e) => out.failures.push(json!({"parts": parts, "n": n, "error": e.to_string()})),
        }
    }
    out
}

/// Coin-exchange formula for every tuple and `0 ≤ n ≤ n_max`.
pub fn check_partition_formula(tuples: &[PartsTuple], n_max: i64) -> (usize, Vec<Value>) {
    flatten(sweep(tuples, |t| check_counts(t, n_max, false)))
}

/// Interior formula for every tuple and `1 ≤ n ≤ n_max`.
pub fn check_interior_formula(tuples: &[PartsTuple], n_max: i64) -> (usize, Vec<Value>) {
    flatten(sweep(tuples, |t| check_counts(t, n_max, true)))
}

/// Quasipolynomial evaluation against the DP counts for `0 ≤ n ≤ 10·Πa`.
pub fn check_quasipolynomials(tuples: &[PartsTuple]) -> (usize, Vec<Value>) {
    flatten(sweep(tuples, check_quasipolynomial))
}

fn check_quasipolynomial(parts: &PartsTuple) -> Outcome {
    let qp = match emit_quasipolynomial(parts) {
        Ok(qp) => qp,
        Err(e) => return Outcome { checked: 1, failures: vec![json!({"parts": parts, "error": e.to_string()})] },
    };
    let n_max: usize = (parts.product() * 10u32).try_into().expect("product fits");
    let counts = partition_counts(parts, n_max);
    let mut out = Outcome::default();
    for (n, c) in counts.iter().enumerate() {
        out.checked += 1;
        let v = qp.eval(n as i64);
        if v != Rational::from(count_as_int(c)) {
            out.failures.push(json!({"parts": parts, "n": n, "quasipolynomial": v, "count": c.to_string()}));
        }
    }
    out
}

/// Decomposition checks for one cone: unimodular terms, term bound, series identity at `N = 8`.
fn check_cone(c: &Cone2) -> Outcome {
    let terms = decompose(c);
    let (u, w) = c.generators();
    let case = json!({"u": u, "w": w, "index": c.index(), "terms": terms.len()});
    let mut problems = Vec::new();
    if !terms.iter().all(|t| t.is_unimodular()) {
        problems.push("non-unimodular term");
    }
    if terms.len() as f64 > cone_term_bound(c.index()) {
        problems.push("too many terms");
    }
    if !series_verify(&terms, c, 8) {
        problems.push("series mismatch");
    }
    let failures = if problems.is_empty() { vec![] } else { vec![json!({"case": case, "problems": problems})] };
    Outcome { checked: 1, failures }
}

/// Cone checks (unimodularity, term bound, series identity) for every cone.
pub fn check_cones(cones: &[Cone2]) -> (usize, Vec<Value>) {
    flatten(sweep(cones, check_cone))
}

fn flatten(outcomes: Vec<Outcome>) -> (usize, Vec<Value>) {
    let all = outcomes.into_iter().fold(Outcome::default(), Outcome::merge);
    (all.checked, all.failures)
}

/// Runs one suite. The grid for each suite, in terms of `max`:
///
/// - `dedekind`: coprime `1 ≤ a < b ≤ max`.
/// - `rademacher`: 1000 seeded instances with `a, b ≤ max`.
/// - `gessel`: coprime `p, q ≤ max`, `1 ≤ n ≤ p + q`.
/// - `general`: tuples of up to 4 parts `≤ max/2`, every `0 < n < Σa`.
/// - `zagier`: tuples of up to 5 parts `≤ max/2`, plus vanishing of every
///   odd-dimensional `s(a_j; …)` drawn from them.
/// - `raddedsum`: coprime `a, b ≤ max`, `-20 ≤ n ≤ 2b`.
/// - `main`: tuples of up to 4 parts `≤ max`, `0 ≤ n ≤ 10·max`.
/// - `ehrhart`: interior counts on the `main` grid, and quasipolynomials for
///   the tuples there with `Πa ≤ 10·max`.
/// - `cone2d`: `max` seeded cones of index at most 10⁴.
pub fn run_suite(suite: Suite, max: u64, seed: u64) -> Result<SuiteReport> {
    if max == 0 {
        return Err(validation("max must be positive"));
    }
    let m = i64::try_from(max).map_err(|_| validation("max too large"))?;
    let half = (m + 1) / 2;
    let outcomes = match suite {
        Suite::Dedekind => {
            let pairs: Vec<_> = coprime_pairs(m).into_iter().filter(|(a, b)| a < b).collect();
            sweep(&pairs, |&(a, b)| Outcome::single(ResidualReport::dedekind(a, b), json!([a, b])))
        }
        Suite::Rademacher => sweep(&rademacher_cases(m, 1000, seed), |(a, b, x, y)| {
            Outcome::single(ResidualReport::rademacher(*a, *b, x, y), json!([a, b, x, y]))
        }),
        Suite::Gessel => sweep(&coprime_pairs(m), |&(p, q)| {
            (1..=p + q)
                .map(|n| Outcome::single(ResidualReport::gessel(p, q, n), json!([p, q, n])))
                .fold(Outcome::default(), Outcome::merge)
        }),
        Suite::General => sweep(&coprime_tuples(half, 4), |t| {
            (1..t.sum())
                .map(|n| Outcome::single(ResidualReport::general(t, n), json!([t, n])))
                .fold(Outcome::default(), Outcome::merge)
        }),
        Suite::Zagier => sweep(&coprime_tuples(half, 5), |t| {
            let mut out = Outcome::single(ResidualReport::zagier(t), json!(t));
            if t.dim() % 2 == 1 {
                for (j, &a) in t.parts().iter().enumerate() {
                    out.checked += 1;
                    match zagier_sum(a, &t.without(j)) {
                        Ok(s) if s.is_zero() => {}
                        Ok(s) => out.failures.push(json!({"modulus": a, "parts": t.without(j), "zagier_sum": s})),
                        Err(e) => out.failures.push(json!({"modulus": a, "error": e.to_string()})),
                    }
                }
            }
            out
        }),
        Suite::Raddedsum => sweep(&coprime_pairs(m), |&(a, b)| {
            (-20..=2 * b)
                .map(|n| Outcome::single(ResidualReport::raddedsum(a, b, n), json!([a, b, n])))
                .fold(Outcome::default(), Outcome::merge)
        }),
        Suite::Main => sweep(&coprime_tuples(m, 4), |t| check_counts(t, 10 * m, false)),
        Suite::Ehrhart => {
            let tuples = coprime_tuples(m, 4);
            let mut outcomes = sweep(&tuples, |t| check_counts(t, 10 * m, true));
            let small: Vec<_> = tuples.into_iter().filter(|t| t.product() <= (10 * m).into()).collect();
            outcomes.extend(sweep(&small, check_quasipolynomial));
            outcomes
        }
        Suite::Cone2d => {
            let n = usize::try_from(max).map_err(|_| validation("max too large"))?;
            sweep(&random_cones(n, 10_000, seed), check_cone)
        }
    };
    Ok(SuiteReport::from_outcomes(suite, max, seed, outcomes))
}
