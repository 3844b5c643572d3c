use std::path::Path;
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

const SESSION: &str = r#"{
    "ring": {"coeff": "Q", "vars": ["x", "y"]},
    "ideals": {"A": ["x^2"], "B": ["x*y"], "X": ["x"]},
    "modules": {"E": {"cyclic": ["A", "B"]}, "F": {"cyclic": ["X"]}},
    "semigroups": {"G": [2, 5]},
    "sg_extensions": {"S": {"small": "G", "large": "N"}},
    "zloc": {"L": 6},
    "zmodules": {"M": {"torsion": [12, 18]}}
}"#;

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

fn supclose(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_supclose")).args(args).output().unwrap()
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

fn session_file(dir: &TempDir) -> String {
    write(dir, "s.json", SESSION)
}

#[test]
fn support_closure_of_two_cyclics() {
    let dir = TempDir::new().unwrap();
    let f = session_file(&dir);
    let out = supclose(&["support-closure", "E", "-f", &f]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["command"], "support-closure");
    assert_eq!(r["result"], json!({"ideal": ["x*y"], "min_primes": [["x"], ["y"]], "closed": true}));
    assert!(r["engine_version"].is_string());
    assert!(r["elapsed_ms"].is_u64());
}

#[test]
fn nonexistent_crucial_ideal_exits_zero() {
    let dir = TempDir::new().unwrap();
    let f = session_file(&dir);
    let out = supclose(&["crucial", "F", "--file", &f]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["result"], json!({"exists": false}));
}

#[test]
fn z_oda_of_torsion_module() {
    let dir = TempDir::new().unwrap();
    let f = session_file(&dir);
    let out = supclose(&["z-oda", "M", &format!("--file={f}")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["result"], json!({"ideal": "6"}));
}

#[test]
fn undeclared_ideal_is_a_reference_error() {
    let dir = TempDir::new().unwrap();
    let f = write(
        &dir,
        "bad.json",
        r#"{"ring": {"coeff": "Q", "vars": ["x"]}, "ideals": {"I1": ["x"]}, "modules": {"E": {"cyclic": ["I9"]}}}"#,
    );
    let out = supclose(&["ann", "E", "-f", &f]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("I9"));
    assert!(out.stdout.is_empty());
}

#[test]
fn syntax_error_reports_position() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "bad.json", "{\"ring\": {\"coeff\": \"Q\",\n \"vars\": [\"x\"] ");
    let out = supclose(&["print", "-f", &f]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn non_numerical_semigroup_is_unsupported() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "bad.json", r#"{"ring": {"coeff": "Q", "vars": ["x"]}, "semigroups": {"G": [4, 6]}}"#);
    let out = supclose(&["print", "-f", &f]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn unknown_command_and_missing_file() {
    let dir = TempDir::new().unwrap();
    let f = session_file(&dir);
    assert_eq!(supclose(&["frobnicate", "-f", &f]).status.code(), Some(2));
    assert_eq!(supclose(&["ann", "E"]).status.code(), Some(2));
    let missing = dir.path().join("nope.json");
    assert_eq!(supclose(&["ann", "E", "-f", &missing.to_string_lossy()]).status.code(), Some(2));
}

#[test]
fn print_round_trips() {
    let dir = TempDir::new().unwrap();
    let f = session_file(&dir);
    let first = supclose(&["print", "-f", &f]);
    assert_eq!(first.status.code(), Some(0));
    let g = write(&dir, "printed.json", &String::from_utf8(first.stdout.clone()).unwrap());
    let second = supclose(&["print", "-f", &g]);
    assert_eq!(first.stdout, second.stdout);
    assert!(Path::new(&g).exists());
}

fn without_timing(out: &Output) -> Value {
    let mut r = report(out);
    r.as_object_mut().unwrap().remove("elapsed_ms");
    r
}

#[test]
fn reports_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let f = session_file(&dir);
    for args in [vec!["sg-analyze", "S"], vec!["zloc-analyze", "L"], vec!["ass", "E"]] {
        let mut argv = args.clone();
        argv.extend(["-f", &f]);
        assert_eq!(without_timing(&supclose(&argv)), without_timing(&supclose(&argv)));
    }
    let a = supclose(&["verify", "--suite", "cars,nagata", "--count", "10", "--seed", "3"]);
    let b = supclose(&["verify", "--suite", "cars,nagata", "--count", "10", "--seed", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(without_timing(&a), without_timing(&b));
}

#[test]
fn verify_cars_with_seed() {
    let out = supclose(&["verify", "--suite", "cars", "--count", "200", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["result"]["passed"], true);
    assert_eq!(r["result"]["suites"][0]["cases"], 200);
}

#[test]
fn verify_zloc_reports_the_six_witness() {
    let out = supclose(&["verify", "--suite", "zloc"]);
    assert_eq!(out.status.code(), Some(0));
    let suite = &report(&out)["result"]["suites"][0];
    assert_eq!(suite["cases"], 10_000);
    assert!(suite["notes"][0].as_str().unwrap().starts_with("n = 6"));
}

#[test]
fn empty_verify_is_a_flagged_vacuous_pass() {
    let out = supclose(&["verify", "--suite", "all", "--count", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["result"]["passed"], true);
    for suite in r["result"]["suites"].as_array().unwrap() {
        assert_eq!(suite["cases"], 0);
        assert!(suite["warning"].is_string());
    }
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}

#[test]
fn unknown_suite_is_rejected() {
    assert_eq!(supclose(&["verify", "--suite", "nope"]).status.code(), Some(2));
}
