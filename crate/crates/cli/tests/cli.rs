use std::process::Command;

use pekt::{Lambda, Rational};
use pekt_cli::{parse_nu, run, NuError, ParsedNu, EXIT_COMPUTATION, EXIT_OK, EXIT_USAGE};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("pekt").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> serde_json::Value {
    let (code, out, err) = call(args);
    assert_eq!(code, EXIT_OK, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn parse_nu_examples() {
    let n = |k| Lambda::power_sum(k, 6, 4);
    assert_eq!(parse_nu("N1", 6, 4), Ok(ParsedNu::PowerSums(n(1))));
    let half = Rational::new(1.into(), 2.into());
    assert_eq!(
        parse_nu("N1^2 + 1/2*N2", 6, 4),
        Ok(ParsedNu::PowerSums(n(1).pow(2).add(&n(2).scale(&half))))
    );
    assert!(matches!(
        parse_nu("x + N1", 6, 4),
        Err(NuError::MixedAlgebras { .. })
    ));
}

#[test]
fn characters_of_s2_as_csv() {
    let (code, out, _) = call(&["characters", "--n", "2", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    // Columns in canonical order: the transposition class (2), then the identity (1,1).
    assert_eq!(out, "irrep,(2),\"(1,1)\"\n(2),1,1\n\"(1,1)\",-1,1\n");
}

#[test]
fn characters_json_matches_csv_layout() {
    let v = json(&["characters", "--n", "3", "--format", "json"]);
    assert_eq!(v["classes"], serde_json::json!(["(3)", "(2,1)", "(1,1,1)"]));
    assert_eq!(v["irreps"], serde_json::json!(["(3)", "(2,1)", "(1,1,1)"]));
    assert_eq!(v["values"][1], serde_json::json!(["-1", "0", "2"]));
}

#[test]
fn symmetrized_correlator_at_three_points() {
    let v = json(&["correlator", "--n", "3", "--nu", "x", "--q-order", "8"]);
    assert_eq!(v["algebra"], "rank1");
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 1);
    assert_eq!(terms[0]["powersum_exponents"], serde_json::json!({"1": 3}));
    // 1/((1-q^2)(1-q^3)): partitions of k into parts 2 and 3.
    let expected: Vec<String> = (0..=8)
        .map(|k| (0..=k / 3).filter(|b| (k - 3 * b) % 2 == 0).count().to_string())
        .collect();
    assert_eq!(terms[0]["coefficient"], serde_json::json!(expected));
}

#[test]
fn jfunction_json_schema() {
    let v = json(&["jfunction", "--nu", "N1", "--n-max", "2", "--weight-cap", "2", "--q-order", "3"]);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    assert_eq!(keys, ["mode", "q_order", "weight_cap", "terms"]);
    assert_eq!(v["mode"], "by_correlators");
    assert_eq!(v["terms"][0]["powersum_exponents"], serde_json::json!({}));
    assert_eq!(v["terms"][0]["q_coefficients"], serde_json::json!(["1", "-1", "0", "0"]));

    let closed = json(&["jfunction", "--nu", "N1", "--mode", "closed", "--weight-cap", "2", "--q-order", "3"]);
    assert_eq!(closed["mode"], "closed_form");
    assert_eq!(closed["terms"], v["terms"]);
}

#[test]
fn trace_and_module_outputs() {
    let (code, out, _) = call(&["trace", "--cycle-type", "2,1", "--space", "full", "--q-order", "3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "1 + q + 2*q^2 + 2*q^3 + O(q^4)\n");

    let (code, out, _) = call(&["module-decompose", "--n", "2", "--q-order", "3", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "irrep,q^0,q^1,q^2,q^3\n(2),1,0,1,0\n\"(1,1)\",0,1,0,1\n");
}

#[test]
fn verify_corollary1_passes() {
    let (code, out, _) = call(&["verify", "corollary1", "--n-max", "8", "--q-order", "20"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("PASS corollary1"), "{out}");
    assert_eq!(out.lines().count(), 1);
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["--help"]).0, EXIT_OK);
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(call(&["classes", "--n", "0"]).0, EXIT_USAGE);
    assert_eq!(call(&["characters", "--n", "2", "--format", "xml"]).0, EXIT_USAGE);
    assert_eq!(call(&["trace", "--cycle-type", "2,1", "--format", "csv"]).0, EXIT_USAGE);

    let (code, _, err) = call(&["correlator", "--n", "2", "--nu", "N1 + x"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("column 6"), "{err}");
    let (code, _, err) = call(&["correlator", "--n", "2", "--nu", "N1 *"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("parse error at column 5"), "{err}");

    assert_eq!(call(&["characters", "--n", "13"]).0, EXIT_COMPUTATION);
    let (code, _, err) = call(&["correlator", "--n", "3", "--nu", "N2", "--weight-cap", "4"]);
    assert_eq!(code, EXIT_COMPUTATION);
    assert!(err.contains("--weight-cap 6"), "{err}");
    assert_eq!(call(&["verify", "all", "--n-max", "3"]).0, EXIT_USAGE);
}

fn binary(args: &[&str], threads: Option<&str>) -> (Option<i32>, Vec<u8>) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_pekt"));
    cmd.args(args).env_remove("THREADS");
    if let Some(t) = threads {
        cmd.env("THREADS", t);
    }
    let output = cmd.output().unwrap();
    (output.status.code(), output.stdout)
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = ["jfunction", "--nu", "N1 + N2", "--n-max", "3", "--weight-cap", "6", "--q-order", "6"];
    let (code, first) = binary(&args, None);
    assert_eq!(code, Some(EXIT_OK));
    assert_eq!(binary(&args, None).1, first);
    assert_eq!(binary(&args, Some("4")).1, first);

    let verify = ["verify", "binomial", "--n-max", "4", "--seed", "11"];
    let (code, first) = binary(&verify, Some("3"));
    assert_eq!(code, Some(EXIT_OK));
    assert_eq!(binary(&verify, None).1, first);
}

#[test]
fn bad_thread_count_is_a_usage_error() {
    assert_eq!(binary(&["classes", "--n", "3"], Some("zero")).0, Some(EXIT_USAGE));
}
