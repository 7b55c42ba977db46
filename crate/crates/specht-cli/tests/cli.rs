//! End-to-end checks of the binary: exit-code contract, stable CSV schema,
//! and machine-readable output.

use std::process::Command;

fn specht(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_specht"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn analyze_reports_verdict_and_spectrum() {
    let (code, stdout, _) = specht(&["analyze", "--a", "3", "--b", "2", "--char", "0"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("decomposable"));
    assert!(stdout.contains("eigenvalues of f"));

    let (code, stdout, _) = specht(&[
        "analyze", "--a", "3", "--b", "2", "--char", "2", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).expect("valid json");
    assert_eq!(v["decomposable"], false);
    assert_eq!(v["rule"], "char2_binary_congruence");
}

#[test]
fn usage_errors_exit_2() {
    let (code, _, _) = specht(&["analyze", "--a", "0", "--b", "2"]);
    assert_eq!(code, 2);
    let (code, _, _) = specht(&["analyze", "--a", "3", "--b", "2", "--char", "6"]);
    assert_eq!(code, 2);
    let (code, _, _) = specht(&["matrix", "--a", "3", "--b", "2", "--gen", "zz9"]);
    assert_eq!(code, 2);
    let (code, _, _) = specht(&["analyze", "--nonsense"]);
    assert_eq!(code, 2);
}

#[test]
fn matrix_json_is_parsable_and_exact() {
    let (code, stdout, _) = specht(&[
        "matrix", "--a", "3", "--b", "2", "--gen", "f", "--char", "0", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["matrix"]["rows"], 6);
    let m = specht::Matrix::from_json(&v["matrix"], specht::FieldSpec::Rational).unwrap();
    assert_eq!(m.rows, 6);
    // y1 is the zero matrix
    let (_, stdout, _) = specht(&[
        "matrix", "--a", "3", "--b", "2", "--gen", "y1", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["matrix"]["entries"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_small_window_passes() {
    let (code, stdout, _) = specht(&[
        "verify", "--n-max", "5", "--chars", "0,3", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["pass"], true);
    for rep in v["reports"].as_array().unwrap() {
        assert!(specht::oracle::VerificationReport::from_json(rep).is_ok());
    }
}

#[test]
fn table_schema_and_empty_range() {
    let (code, stdout, _) = specht(&["table", "--a", "3..5", "--b", "2..3", "--char", "0"]);
    assert_eq!(code, 0);
    let mut lines = stdout.lines();
    assert_eq!(lines.next(), Some("a,b,n,char,decomposable,rule"));
    assert_eq!(lines.count(), 6);
    // empty range: header only, still success
    let (code, stdout, _) = specht(&["table", "--a", "5..3", "--b", "2..2", "--char", "0"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "a,b,n,char,decomposable,rule");
}

#[test]
fn trace_emits_named_lemmas() {
    let (code, stdout, _) = specht(&["analyze", "--a", "5", "--b", "4", "--char", "0", "--trace"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("garnir-commute.") || stdout.contains("psi-actions."));
}
