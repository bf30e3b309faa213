//! End-to-end checks of the command-line surface.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scatalan"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn sbinom_values_and_formats() {
    let out = run(&["sbinom", "4", "6", "3"]);
    assert_eq!(stdout(&out).trim(), "44");
    let out = run(&["sbinom", "2", "1", "1"]);
    assert_eq!(stdout(&out).trim(), "2");
    let out = run(&["sbinom", "2", "9", "3"]);
    assert_eq!(stdout(&out).trim(), "0");

    let out = run(&["sbinom", "8", "28", "7", "--format", "json"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["schema_version"], 1);
    assert!(json["value"].is_string(), "big values rendered as strings");

    let out = run(&["sbinom", "4", "6", "3", "--format", "csv"]);
    assert_eq!(stdout(&out), "n,k,s,value\n4,6,3,44\n");
}

#[test]
fn table_row_one_is_all_ones() {
    let out = run(&["table", "scatalan", "1", "3", "--format", "csv"]);
    assert_eq!(stdout(&out), "n,1,2,3\n1,1,1,1\n");
}

#[test]
fn golden_tables_match() {
    assert!(run(&["table", "scatalan", "8", "7", "--golden"]).status.success());
    assert!(run(&["table", "spin", "10", "7/2", "--golden"]).status.success());
}

#[test]
fn golden_mismatch_names_first_cell() {
    // Wrong dimensions cannot match the shipped fixture.
    let out = run(&["table", "scatalan", "8", "6", "--golden"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("golden mismatch"), "stderr: {err}");
}

#[test]
fn lrcoef_worked_example() {
    let out = run(&["lrcoef", "(3,2,1)", "(1)", "(3,2)", "--list"]);
    assert_eq!(stdout(&out), "1\n\n. 1 1\n1 2\n2\n");
    let out = run(&["lrcoef", "(1)", "(1)", "()"]);
    assert_eq!(stdout(&out).trim(), "1");
    let out = run(&["lrcoef", "(2)", "(1)", "(2)"]);
    assert_eq!(stdout(&out).trim(), "0");
}

#[test]
fn lrcoef_containment_error_is_usage_error() {
    let out = run(&["lrcoef", "(1)", "(2)", "(1)"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_sweeps() {
    let out = run(&["verify", "scatlr", "--n", "1..3", "--s", "1..4"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("12/12 pass"));

    let out = run(&["verify", "oddrow", "--t", "1..4", "--m", "1..3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("12/12 pass"));

    let out = run(&["verify", "spinlr", "--n", "1..5", "--s", "1/2..5/2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("19/19 pass"));
}

#[test]
fn verify_excluded_corner_is_domain_error() {
    let out = run(&["verify", "spinlr", "--n", "2", "--s", "1/2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("outside theorem domain"), "stderr: {err}");
}

#[test]
fn verify_json_is_versioned() {
    let out = run(&["verify", "scatlr", "--n", "1..2", "--s", "1..2", "--format", "json"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["schema_version"], 1);
    assert_eq!(json["passed"], json["total"]);
    assert_eq!(json["results"][0]["lhs"], "1");
}

#[test]
fn stretch_reports() {
    let out = run(&[
        "stretch", "(4,3,2,1)", "(3,2,1)", "(2,2)", "--fit", "3", "--check", "3",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("degree: 1"));
    assert!(text.contains("all coefficients nonnegative"));

    let out = run(&[
        "stretch", "(6,5,4,3,2,1)", "(5,4,3,2,1)", "(3,3)", "--fit", "5", "--check", "2",
        "--format", "json",
    ]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["degree"], 3);
    assert_eq!(json["samples"][5][1], "175");
    assert_eq!(json["samples"][6][1], "260");

    let out = run(&["stretch", "(1)", "()", "(1)", "--fit", "2", "--check", "2"]);
    assert!(stdout(&out).contains("degree: 0"));
}

#[test]
fn stretch_size_mismatch_is_usage_error() {
    let out = run(&["stretch", "(2)", "(1)", "(2)", "--fit", "2", "--check", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enum_budget_env_var_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_scatalan"))
        .args(["verify", "oddrow", "--t", "2", "--m", "2"])
        .env("LR_ENUM_BUDGET", "5")
        .output()
        .unwrap();
    assert!(out.status.success(), "binomial sides still verified");
    assert!(stdout(&out).contains("skipped"));
}
