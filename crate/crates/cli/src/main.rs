use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, RandBigInt};
use num_integer::Integer;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use dedekind_core::cone2d::{decompose, enumerate_bruteforce, series_verify, Cone2, Vec2};
use dedekind_core::dedekind::{dedekind_fast, dedekind_naive, knuth_sum, rademacher_sum};
use dedekind_core::fouriersums::{fourier_dedekind, zagier_sum};
use dedekind_core::partition::{
    count_as_int, emit_quasipolynomial, interior_count, interior_formula, partition_count, partition_formula, q_value,
    PartsTuple,
};
use dedekind_core::verify::{run_suite, Suite};
use dedekind_core::{Error, Rational};

/// Exact Dedekind-type sums, coin-exchange counts and their reciprocity laws.
#[derive(Parser)]
#[command(name = "dedekind", version)]
struct Cli {
    /// Print a single JSON document instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    /// Also write the JSON document to this file.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classical Dedekind sum s(a, b).
    #[command(allow_negative_numbers = true)]
    Dedekind {
        a: BigInt,
        b: BigInt,
        /// Use direct O(b) summation instead of the reciprocity descent.
        #[arg(long)]
        naive: bool,
    },
    /// Dedekind-Rademacher sum s(a, b; x, y).
    #[command(allow_negative_numbers = true)]
    Rademacher {
        a: i64,
        b: i64,
        #[arg(long, allow_hyphen_values = true)]
        x: Rational,
        #[arg(long, allow_hyphen_values = true)]
        y: Rational,
    },
    /// Knuth's sum s(a, b; n/b, 0).
    #[command(allow_negative_numbers = true)]
    Knuth { a: i64, b: i64, n: i64 },
    /// Fourier-Dedekind sum σ_n(a1,...,ad; a0).
    #[command(allow_negative_numbers = true)]
    Fourier {
        n: i64,
        #[arg(long = "mod", value_name = "A0")]
        modulus: i64,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        parts: Vec<i64>,
    },
    /// Zagier's higher-dimensional Dedekind sum s(a0; a1,...,ad).
    #[command(allow_negative_numbers = true)]
    Zagier { a0: i64, parts: Vec<i64> },
    /// Number of ways to write n as a nonnegative combination of the parts.
    Partition {
        #[arg(long, value_delimiter = ',', required = true)]
        parts: Vec<i64>,
        n: i64,
        #[arg(long, value_enum, default_value_t = Method::Dp)]
        method: Method,
        /// Count representations with every coefficient positive.
        #[arg(long)]
        interior: bool,
    },
    /// Polynomial part and periodic tables of the counting function.
    Quasipoly {
        #[arg(long, value_delimiter = ',', required = true)]
        parts: Vec<i64>,
    },
    /// Polynomial part q(parts, n) of the counting function.
    #[command(allow_negative_numbers = true)]
    Q {
        #[arg(long, value_delimiter = ',', required = true)]
        parts: Vec<i64>,
        n: i64,
    },
    /// Run a verification suite (or `all`).
    Verify {
        suite: SuiteArg,
        #[arg(long, default_value_t = 30)]
        max: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Signed unimodular decomposition of the cone spanned by two vectors.
    Cone2d {
        #[arg(long = "gen", num_args = 2, value_parser = parse_vec2, allow_hyphen_values = true, required = true)]
        generators: Vec<Vec2>,
        /// Check the decomposition against the lattice points with |m|∞ <= N.
        #[arg(long, value_name = "N")]
        truncate: Option<u32>,
    },
    /// Timing runs.
    Bench {
        #[command(subcommand)]
        target: BenchTarget,
    },
}

#[derive(Subcommand)]
enum BenchTarget {
    /// Time dedekind_fast (and dedekind_naive for bits <= 24) on random coprime pairs.
    Dedekind {
        #[arg(long)]
        bits: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Dp,
    Formula,
}

#[derive(Clone, Copy)]
enum SuiteArg {
    All,
    One(Suite),
}

impl std::str::FromStr for SuiteArg {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "all" {
            Ok(SuiteArg::All)
        } else {
            s.parse().map(SuiteArg::One)
        }
    }
}

fn parse_vec2(s: &str) -> Result<Vec2, String> {
    let (x, y) = s.split_once(',').ok_or_else(|| format!("expected x,y, got {s:?}"))?;
    let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("{t:?}: {e}"));
    Ok([parse(x)?, parse(y)?])
}

struct Output {
    text: String,
    json: Value,
    /// A residual or check came out nonzero.
    failed: bool,
}

impl Output {
    fn ok(text: impl Into<String>, json: Value) -> Self {
        Output { text: text.into(), json, failed: false }
    }
}

fn parts_tuple(parts: &[i64]) -> Result<PartsTuple, Error> {
    PartsTuple::new(parts.to_vec())
}

fn run(command: Command) -> Result<Output, Error> {
    match command {
        Command::Dedekind { a, b, naive } => {
            if a.gcd(&b) != BigInt::from(1) {
                return Err(Error::Validation(format!("gcd({a}, {b}) != 1")));
            }
            let value = if naive {
                let small = |v: &BigInt| {
                    i64::try_from(v).map_err(|_| Error::Validation(format!("{v} is too large for --naive")))
                };
                dedekind_naive(small(&a)?, small(&b)?)?
            } else {
                dedekind_fast(a.clone(), b.clone())?
            };
            let method = if naive { "naive" } else { "fast" };
            let json =
                json!({"op": "dedekind", "a": a.to_string(), "b": b.to_string(), "method": method, "value": value});
            Ok(Output::ok(value.to_string(), json))
        }
        Command::Rademacher { a, b, x, y } => {
            let value = rademacher_sum(a, b, &x, &y)?;
            Ok(Output::ok(
                value.to_string(),
                json!({"op": "rademacher", "a": a, "b": b, "x": x, "y": y, "value": value}),
            ))
        }
        Command::Knuth { a, b, n } => {
            let value = knuth_sum(a, b, n)?;
            Ok(Output::ok(value.to_string(), json!({"op": "knuth", "a": a, "b": b, "n": n, "value": value})))
        }
        Command::Fourier { n, modulus, parts } => {
            let value = fourier_dedekind(n, &parts, modulus)?;
            let json = json!({"op": "fourier", "n": n, "modulus": modulus, "parts": parts, "value": value});
            Ok(Output::ok(value.to_string(), json))
        }
        Command::Zagier { a0, parts } => {
            let value = zagier_sum(a0, &parts)?;
            Ok(Output::ok(value.to_string(), json!({"op": "zagier", "modulus": a0, "parts": parts, "value": value})))
        }
        Command::Partition { parts, n, method, interior } => {
            let t = parts_tuple(&parts)?;
            let count = match (method, interior) {
                (Method::Dp, false) => count_as_int(&partition_count(&t, n)),
                (Method::Dp, true) => count_as_int(&interior_count(&t, n)),
                (Method::Formula, false) => partition_formula(&t, n)?,
                (Method::Formula, true) => interior_formula(&t, n)?,
            };
            let method = match method {
                Method::Dp => "dp",
                Method::Formula => "formula",
            };
            let json = json!({"op": "partition", "parts": t, "n": n, "method": method, "interior": interior, "count": count.to_string()});
            Ok(Output::ok(count.to_string(), json))
        }
        Command::Quasipoly { parts } => {
            let qp = emit_quasipolynomial(&parts_tuple(&parts)?)?;
            let mut text = format!("parts {}\n", qp.parts);
            let coeffs: Vec<String> = qp.poly.iter().map(Rational::to_string).collect();
            text += &format!("poly {}\n", coeffs.join(" "));
            for table in &qp.tables {
                let values: Vec<String> = table.values.iter().map(Rational::to_string).collect();
                text += &format!("period {} {}\n", table.modulus, values.join(" "));
            }
            let json = json!({"op": "quasipoly", "quasipolynomial": qp});
            Ok(Output::ok(text.trim_end(), json))
        }
        Command::Q { parts, n } => {
            let t = parts_tuple(&parts)?;
            let value = q_value(&t, n)?;
            Ok(Output::ok(value.to_string(), json!({"op": "q", "parts": t, "n": n, "value": value})))
        }
        Command::Verify { suite, max, seed } => {
            let suites = match suite {
                SuiteArg::All => Suite::ALL.to_vec(),
                SuiteArg::One(s) => vec![s],
            };
            let reports = suites.into_iter().map(|s| run_suite(s, max, seed)).collect::<Result<Vec<_>, _>>()?;
            let mut lines = Vec::new();
            for r in &reports {
                lines.push(format!("{} {r}", if r.passed() { "PASS" } else { "FAIL" }));
                for f in r.failures.iter().take(3) {
                    lines.push(format!("  {f}"));
                }
            }
            let failed = reports.iter().any(|r| !r.passed());
            let json = json!({"op": "verify", "seed": seed, "max": max, "reports": reports});
            Ok(Output { text: lines.join("\n"), json, failed })
        }
        Command::Cone2d { generators, truncate } => {
            let cone = Cone2::new(generators[0], generators[1])?;
            let terms = decompose(&cone);
            let mut lines: Vec<String> = terms.iter().map(ToString::to_string).collect();
            let mut json = json!({"op": "cone2d", "cone": cone, "index": cone.index(), "terms": terms});
            let mut failed = false;
            if let Some(n) = truncate {
                let points = enumerate_bruteforce(&cone, n).len();
                let agrees = series_verify(&terms, &cone, n);
                failed = !agrees;
                lines.push(format!(
                    "truncated at {n}: {points} lattice points, series {}",
                    if agrees { "agrees" } else { "DISAGREES" }
                ));
                json["truncate"] = json!({"n": n, "points": points, "agrees": agrees});
            }
            Ok(Output { text: lines.join("\n"), json, failed })
        }
        Command::Bench { target: BenchTarget::Dedekind { bits, samples, seed } } => bench_dedekind(bits, samples, seed),
    }
}

fn random_coprime_pairs(bits: u64, samples: usize, seed: u64) -> Vec<(BigInt, BigInt)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let top = BigInt::from(1) << (bits - 1);
    let mut pairs = Vec::with_capacity(samples);
    while pairs.len() < samples {
        let b = BigInt::from(rng.gen_biguint(bits - 1)) + &top;
        let a = BigInt::from(rng.gen_biguint(bits));
        if a.gcd(&b) == BigInt::from(1) {
            pairs.push((a, b));
        }
    }
    pairs
}

fn time_each<T>(items: &[T], f: impl Fn(&T) -> Result<Rational, Error>) -> Result<(Duration, Duration), Error> {
    let mut total = Duration::ZERO;
    let mut worst = Duration::ZERO;
    for item in items {
        let start = Instant::now();
        std::hint::black_box(f(item)?);
        let elapsed = start.elapsed();
        total += elapsed;
        worst = worst.max(elapsed);
    }
    Ok((total / items.len() as u32, worst))
}

fn bench_dedekind(bits: u64, samples: usize, seed: u64) -> Result<Output, Error> {
    if !(2..=1 << 16).contains(&bits) {
        return Err(Error::Validation(format!("bits must be in 2..=65536, got {bits}")));
    }
    if samples == 0 {
        return Err(Error::Validation("samples must be positive".into()));
    }
    let pairs = random_coprime_pairs(bits, samples, seed);
    let (mean, worst) = time_each(&pairs, |(a, b)| dedekind_fast(a.clone(), b.clone()))?;
    let mut lines = vec![format!("dedekind_fast  bits {bits}  samples {samples}  mean {mean:?}  max {worst:?}")];
    let mut json = json!({
        "op": "bench", "bits": bits, "samples": samples, "seed": seed,
        "fast": {"mean_ns": mean.as_nanos() as u64, "max_ns": worst.as_nanos() as u64},
    });
    if bits <= 24 {
        let small: Vec<(i64, i64)> =
            pairs.iter().map(|(a, b)| (i64::try_from(a).unwrap(), i64::try_from(b).unwrap())).collect();
        for (a, b) in &small {
            if dedekind_naive(*a, *b)? != dedekind_fast(*a, *b)? {
                return Err(Error::InternalInconsistency(format!("fast and naive disagree at ({a}, {b})")));
            }
        }
        let (mean, worst) = time_each(&small, |&(a, b)| dedekind_naive(a, b))?;
        lines.push(format!("dedekind_naive bits {bits}  samples {samples}  mean {mean:?}  max {worst:?}"));
        json["naive"] = json!({"mean_ns": mean.as_nanos() as u64, "max_ns": worst.as_nanos() as u64});
    }
    Ok(Output::ok(lines.join("\n"), json))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = match run(cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return match e {
                Error::InternalInconsistency(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            };
        }
    };
    let doc = serde_json::to_string_pretty(&output.json).expect("output serializes");
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, format!("{doc}\n")) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    let shown = if cli.json { doc } else { output.text };
    // A closed pipe is not an error worth reporting.
    let _ = writeln!(std::io::stdout().lock(), "{shown}");
    if output.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
