use std::process::{Command, Output};

use dedekind_core::dedekind::rademacher_sum;
use dedekind_core::fouriersums::fourier_dedekind;
use dedekind_core::Rational;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dedekind")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    stdout(&out).trim_end().to_string()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.push("--json");
    serde_json::from_str(&ok(&full)).unwrap()
}

#[test]
fn spec_examples() {
    assert_eq!(ok(&["dedekind", "2", "3"]), "-1/18");
    assert_eq!(ok(&["dedekind", "2", "3", "--naive"]), "-1/18");
    assert_eq!(ok(&["partition", "--parts", "1,2", "4", "--method", "formula"]), "3");
    let out = run(&["verify", "dedekind", "--max", "50"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains(" 0 failures"), "{}", stdout(&out));
}

#[test]
fn sums() {
    assert_eq!(ok(&["dedekind", "-2", "3"]), "1/18");
    assert_eq!(ok(&["knuth", "2", "3", "1"]), "1/36");
    assert_eq!(ok(&["rademacher", "5", "7", "--x", "2/5", "--y", "-3/4"]), "89/560");
    assert_eq!(ok(&["fourier", "3", "--mod", "7", "--parts", "2,3"]), "-1/7");
    assert_eq!(ok(&["fourier", "-5", "--mod", "9", "--parts", "1,2,4"]), "-1/27");
    assert_eq!(ok(&["zagier", "3", "1", "1"]), "-2/9");
    assert_eq!(ok(&["zagier", "7", "2"]), "0");
    assert_eq!(ok(&["q", "--parts", "2,3", "0"]), "5/12");
}

#[test]
fn large_dedekind_arguments() {
    let a = "340282366920938463463374607431768211457";
    let b = "115792089237316195423570985008687907853269984665640564039457584007913129639747";
    let v: Rational = ok(&["dedekind", a, b]).parse().unwrap();
    assert!(!v.is_zero());
}

#[test]
fn partition_methods_agree() {
    for parts in ["1,2", "3,5,7", "2,9,11,13", "1,1,4"] {
        for n in [0, 1, 7, 30, 101] {
            let n = n.to_string();
            let dp = ok(&["partition", "--parts", parts, &n, "--method", "dp"]);
            let formula = ok(&["partition", "--parts", parts, &n, "--method", "formula"]);
            assert_eq!(dp, formula, "{parts} {n}");
            if n != "0" {
                let dp = ok(&["partition", "--parts", parts, &n, "--interior"]);
                let formula = ok(&["partition", "--parts", parts, &n, "--interior", "--method", "formula"]);
                assert_eq!(dp, formula, "interior {parts} {n}");
            }
        }
    }
}

#[test]
fn quasipolynomial_output() {
    assert_eq!(
        ok(&["quasipoly", "--parts", "2,3"]),
        "parts {2,3}\npoly 5/12 1/6\nperiod 2 1/4 -1/4\nperiod 3 1/3 -1/3 0"
    );
    let doc = json(&["quasipoly", "--parts", "2,3"]);
    assert_eq!(doc["quasipolynomial"]["poly"], serde_json::json!(["5/12", "1/6"]));
}

#[test]
fn validation_errors_exit_2() {
    for args in [
        &["dedekind", "4", "6"][..],
        &["partition", "--parts", "2,4", "5"],
        &["fourier", "1", "--mod", "6", "--parts", "3"],
        &["knuth", "2", "0", "1"],
        &["dedekind", "1", "0"],
        &["cone2d", "--gen", "1,2", "2,4"],
        &["verify", "nosuch"],
        &["dedekind", "two", "3"],
        &["rademacher", "2", "3", "--x", "1/0", "--y", "0"],
        &[],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let err = String::from_utf8(run(&["dedekind", "4", "6"]).stderr).unwrap();
    assert!(err.contains("gcd(4, 6) != 1"), "{err}");
}

#[test]
fn json_round_trips() {
    let doc = json(&["fourier", "-4", "--mod", "11", "--parts", "2,3,5"]);
    let parts: Vec<i64> = serde_json::from_value(doc["parts"].clone()).unwrap();
    let again = fourier_dedekind(doc["n"].as_i64().unwrap(), &parts, doc["modulus"].as_i64().unwrap()).unwrap();
    assert_eq!(doc["value"].as_str().unwrap().parse::<Rational>().unwrap(), again);

    let doc = json(&["rademacher", "4", "9", "--x", "1/3", "--y", "-2/5"]);
    let x: Rational = doc["x"].as_str().unwrap().parse().unwrap();
    let y: Rational = doc["y"].as_str().unwrap().parse().unwrap();
    let again = rademacher_sum(doc["a"].as_i64().unwrap(), doc["b"].as_i64().unwrap(), &x, &y).unwrap();
    assert_eq!(doc["value"].as_str().unwrap().parse::<Rational>().unwrap(), again);

    let doc = json(&["dedekind", "5", "17"]);
    assert_eq!(doc["value"], "1/17");
}

#[test]
fn cone_terms() {
    let text = ok(&["cone2d", "--gen", "1,0", "1,2"]);
    assert!(text.lines().count() <= 2);
    for line in text.lines() {
        assert!(line.starts_with("+ x^(") || line.starts_with("- x^("), "{line}");
        assert!(line.contains(") / (1 - x^("));
    }
    assert_eq!(ok(&["cone2d", "--gen", "1,0", "0,1"]), "+ x^(0,0) / (1 - x^(1,0)) (1 - x^(0,1))");
    let checked = ok(&["cone2d", "--gen", "-3,7", "5,-2", "--truncate", "8"]);
    assert!(checked.ends_with("series agrees"), "{checked}");
    let doc = json(&["cone2d", "--gen", "3,1", "1,4", "--truncate", "5"]);
    assert_eq!(doc["index"], 11);
    assert_eq!(doc["truncate"]["agrees"], true);
    assert!(doc["terms"].as_array().unwrap().iter().all(|t| t["denominators"].is_array()));
}

#[test]
fn out_file_holds_json() {
    let dir = std::env::temp_dir().join(format!("dedekind-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let text = ok(&["verify", "gessel", "--max", "8", "--out", path.to_str().unwrap()]);
    assert!(text.starts_with("PASS gessel:"));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["reports"][0]["suite"], "gessel");
    assert_eq!(doc["reports"][0]["failed"], 0);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn failing_suite_exits_1() {
    let out = run(&["verify", "raddedsum", "--max", "6"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("FAIL raddedsum:"));
}

#[test]
fn seed_is_reported() {
    let doc = json(&["verify", "rademacher", "--max", "10", "--seed", "77"]);
    assert_eq!(doc["seed"], 77);
    assert_eq!(doc["reports"][0]["seed"], 77);
    assert!(ok(&["verify", "cone2d", "--max", "10", "--seed", "77"]).contains("seed 77"));
}

#[test]
fn verify_all_is_deterministic() {
    let first = run(&["verify", "all", "--max", "30", "--seed", "1", "--json"]);
    let second = run(&["verify", "all", "--max", "30", "--seed", "1", "--json"]);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.status.code(), second.status.code());
    let doc: Value = serde_json::from_slice(&first.stdout).unwrap();
    let reports = doc["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 9);
    // Every suite except raddedsum passes.
    for r in reports {
        assert_eq!(r["failed"] == 0, r["suite"] != "raddedsum", "{}", r["suite"]);
    }
}

#[test]
fn bench_runs() {
    let text = ok(&["bench", "dedekind", "--bits", "16", "--samples", "5"]);
    assert!(text.contains("dedekind_fast") && text.contains("dedekind_naive"));
    let text = ok(&["bench", "dedekind", "--bits", "128", "--samples", "5"]);
    assert!(!text.contains("dedekind_naive"));
}
