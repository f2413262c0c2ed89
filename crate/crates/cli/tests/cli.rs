//! End-to-end tests of the binary: exit codes, output schemas, and the
//! byte-determinism guarantee (acceptance criterion 10 of the suite in the
//! core crate: identical invocations must produce identical bytes).

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chebcensus"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    String::from_utf8(out.stdout).expect("utf-8 output")
}

#[test]
fn acceptance_10_byte_identical_reruns() {
    let invocations: Vec<Vec<&str>> = vec![
        vec![
            "expand", "--kind", "T", "--n", "6", "--c", "3/2", "--d", "2",
        ],
        vec![
            "expand", "--kind", "U", "--n", "5", "--c", "-3/2", "--format", "csv",
        ],
        vec!["coeff", "--n", "8", "--c", "101/100", "--k", "-4"],
        vec!["census", "--r", "2", "--k", "5", "--backend", "bruteforce"],
        vec![
            "census",
            "--r",
            "2",
            "--k",
            "5",
            "--backend",
            "genfn",
            "--format",
            "csv",
        ],
        vec!["census", "--r", "3", "--k", "4", "--compare"],
        vec!["verify", "--suite", "all", "--c", "3/2,2", "--n-max", "12"],
        vec!["verify", "--suite", "nonneg", "--c", "1/2", "--n-max", "4"],
        vec!["total", "--r", "5", "--k", "13"],
    ];
    for args in invocations {
        let first = run(&args);
        let second = run(&args);
        assert_eq!(
            first.stdout, second.stdout,
            "stdout differs between runs of {args:?}"
        );
        assert_eq!(
            first.status.code(),
            second.status.code(),
            "exit code differs between runs of {args:?}"
        );
    }
    println!("acceptance 10 (byte-identical output for identical invocations): PASS");
}

#[test]
fn expand_poly_json_matches_hand_expansion() {
    // 2(x + 1/x)^2 - 1 = 2x^2 + 3 + 2x^-2
    let out = stdout_of(&["expand", "--kind", "T", "--n", "2", "--c", "2", "--d", "1"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["kind"], "T");
    assert_eq!(v["n"], 2);
    assert_eq!(v["c"], "2");
    assert_eq!(v["poly"]["dimension"], 1);
    let terms = v["poly"]["terms"].as_array().unwrap();
    let flat: Vec<(i64, &str, &str)> = terms
        .iter()
        .map(|t| {
            (
                t["exp"][0].as_i64().unwrap(),
                t["num"].as_str().unwrap(),
                t["den"].as_str().unwrap(),
            )
        })
        .collect();
    assert_eq!(flat, vec![(0, "3", "1"), (-2, "2", "1"), (2, "2", "1")]);
}

#[test]
fn expand_methods_agree_via_cli() {
    let recurrence = stdout_of(&[
        "expand",
        "--kind",
        "U",
        "--n",
        "7",
        "--c",
        "5/3",
        "--d",
        "2",
        "--method",
        "recurrence",
    ]);
    let compose = stdout_of(&[
        "expand", "--kind", "U", "--n", "7", "--c", "5/3", "--d", "2", "--method", "compose",
    ]);
    assert_eq!(recurrence, compose);
}

#[test]
fn census_compare_agrees_and_exits_zero() {
    let out = run(&["census", "--r", "2", "--k", "2", "--compare"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(v["backends_agree"], true);
    assert_eq!(v["total"], "12");
}

#[test]
fn census_csv_has_header_and_graded_lex_rows() {
    let out = stdout_of(&["census", "--r", "2", "--k", "2", "--format", "csv"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "e_1,e_2,count");
    assert_eq!(lines[1], "-2,0,1");
    assert_eq!(lines[2], "-1,-1,2");
    assert_eq!(lines.len(), 9);
}

#[test]
fn census_backends_match_in_json() {
    let brute = stdout_of(&["census", "--r", "2", "--k", "6", "--backend", "bruteforce"]);
    let genfn = stdout_of(&["census", "--r", "2", "--k", "6", "--backend", "genfn"]);
    let b: serde_json::Value = serde_json::from_str(&brute).unwrap();
    let g: serde_json::Value = serde_json::from_str(&genfn).unwrap();
    assert_eq!(b["census"], g["census"]);
    assert_eq!(b["total"], g["total"]);
    assert_eq!(b["backend"], "bruteforce");
    assert_eq!(g["backend"], "genfn");
}

#[test]
fn verify_failure_exits_one_with_counterexample() {
    let out = run(&["verify", "--suite", "nonneg", "--c", "1/2", "--n-max", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value =
        serde_json::from_str(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    let failing = v
        .as_array()
        .unwrap()
        .iter()
        .find(|check| check["pass"] == false)
        .expect("a failing check");
    assert_eq!(failing["counterexample"]["n"], 2);
    assert_eq!(failing["counterexample"]["k"], 0);
    assert_eq!(failing["counterexample"]["value"], "-3/4");
}

#[test]
fn verify_passing_suites_exit_zero() {
    let out = run(&[
        "verify", "--suite", "all", "--c", "3/2,2,10", "--n-max", "10",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&[
        "verify", "--suite", "sign", "--c", "-3/2,-2", "--n-max", "12",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["verify", "--suite", "counterexample", "--c", "1/2,99/100"]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["verify", "--suite", "trivial", "--n-max", "50"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_moretrig_reports_advisory_variant() {
    let out = run(&["verify", "--suite", "moretrig", "--c", "2", "--n-max", "10"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "advisory entries must not fail the suite"
    );
    let v: serde_json::Value =
        serde_json::from_str(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    let advisory = v
        .as_array()
        .unwrap()
        .iter()
        .find(|check| check["property"] == "moretrig-shifted-variant")
        .expect("advisory entry present");
    assert_eq!(advisory["pass"], false);
    assert_eq!(advisory["params"]["advisory"], true);
    assert!(advisory["counterexample"].is_object());
}

#[test]
fn usage_errors_exit_two() {
    // malformed rational
    let out = run(&[
        "expand", "--kind", "T", "--n", "2", "--c", "2/x", "--d", "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    // unknown subcommand (clap)
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    // budget exceeded
    let out = run(&[
        "census",
        "--r",
        "2",
        "--k",
        "9",
        "--backend",
        "bruteforce",
        "--budget",
        "100",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let diagnostic = String::from_utf8(out.stderr).unwrap();
    assert!(diagnostic.contains("budget"), "diagnostic: {diagnostic}");
}

#[test]
fn total_matches_closed_form() {
    let out = stdout_of(&["total", "--r", "2", "--k", "2"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["total"], "12");
    let out = stdout_of(&["total", "--r", "1", "--k", "5"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["total"], "2");
}
