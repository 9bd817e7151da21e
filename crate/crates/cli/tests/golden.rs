//! Golden-file tests: every sample script replays byte-identically.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn run(script: &str, extra_args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subscheme-calc"))
        .arg("run")
        .arg(data(script))
        .args(extra_args)
        .output()
        .expect("binary runs")
}

fn combined(output: &Output) -> Vec<u8> {
    let mut bytes = output.stdout.clone();
    bytes.extend_from_slice(&output.stderr);
    bytes
}

fn check_golden(script: &str, expected: &str, expected_code: i32) {
    let first = run(script, &[]);
    let second = run(script, &[]);
    assert_eq!(
        combined(&first),
        combined(&second),
        "{script}: output differs between runs"
    );
    assert_eq!(first.status.code(), Some(expected_code), "{script}: exit code");
    let want = std::fs::read(data(expected)).expect("golden file");
    assert_eq!(
        combined(&first),
        want,
        "{script}: output differs from {expected}"
    );
}

#[test]
fn projective_line_script() {
    check_golden("p1.ssc", "p1.expected", 0);
}

#[test]
fn diagonal_script_reports_the_inequality() {
    check_golden("diagonal.ssc", "diagonal.expected", 1);
}

#[test]
fn law_suites_are_reproducible() {
    check_golden("laws_small.ssc", "laws_small.expected", 0);
}

#[test]
fn cocycle_flag_accepted_on_p1() {
    let out = run("p1.ssc", &["--cocycle-check"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn lex_order_flag_changes_canonical_forms_deterministically() {
    let a = run("p1.ssc", &["--order", "lex"]);
    let b = run("p1.ssc", &["--order", "lex"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(combined(&a), combined(&b));
}

#[test]
fn parse_errors_exit_with_code_two() {
    let dir = std::env::temp_dir().join("subscheme-calc-golden");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.ssc");
    std::fs::write(&bad, "ring A = QQ[x];\nideal I in A = (x^2 -").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_subscheme-calc"))
        .arg("run")
        .arg(&bad)
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("2:"), "position missing in: {err}");
}
