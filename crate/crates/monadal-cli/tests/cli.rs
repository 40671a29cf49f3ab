//! The binary: exit codes, report formats and dumps.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use monadal::Report;
use monadal_cli::verify::default_fixtures;

fn fixture(name: &str) -> PathBuf {
    default_fixtures().join(format!("{name}.json"))
}

fn monadal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monadal")).args(args).output().expect("binary runs")
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let d = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli").join(name);
    let _ = std::fs::remove_dir_all(&d);
    std::fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn passing_checks_exit_zero() {
    let o = monadal(&["check-category", "--category", s(&fixture("vec_s3"))]);
    assert_eq!(o.status.code(), Some(0));
    let out = String::from_utf8(o.stdout).unwrap();
    assert!(out.contains("summary:") && out.contains(" 0 failed"), "{out}");
    let o = monadal(&["check-hopf-algebra", "--category", s(&fixture("vec")), "--hopf", s(&fixture("sweedler"))]);
    assert_eq!(o.status.code(), Some(0));
    let o = monadal(&["check-hopf-monad", "--category", s(&fixture("vec")), "--monad", s(&fixture("kz2_right_monad"))]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn corrupted_json_is_a_parse_error() {
    let d = scratch("corrupt");
    let text = std::fs::read_to_string(fixture("vec_z2")).unwrap();
    let bad = d.join("bad.json");
    std::fs::write(&bad, &text[..text.len() / 2]).unwrap();
    let o = monadal(&["check-category", "--category", s(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(monadal(&["double"]).status.code(), Some(2));
    assert_eq!(monadal(&["no-such-command"]).status.code(), Some(2));
    let o = monadal(&["centralize", "--category", s(&fixture("vec"))]);
    assert_eq!(o.status.code(), Some(2), "missing --monad and --hopf");
}

/// Changing one product entry of kZ2 breaks associativity-type axioms; the FAIL line names
/// the axiom and the location.
#[test]
fn broken_algebra_fails_with_named_axiom() {
    let d = scratch("broken");
    let mut j: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(fixture("kz2")).unwrap()).unwrap();
    j["m"]["entries"][0][2] = serde_json::json!("2");
    let bad = d.join("kz2_bad.json");
    std::fs::write(&bad, serde_json::to_string(&j).unwrap()).unwrap();
    let o = monadal(&["check-hopf-algebra", "--category", s(&fixture("vec")), "--hopf", s(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    let out = String::from_utf8(o.stdout).unwrap();
    let fail = out.lines().find(|l| l.starts_with("FAIL")).expect("a FAIL line");
    assert!(fail.contains('[') && fail.contains(']'), "{fail}");
}

#[test]
fn json_reports_round_trip() {
    let o = monadal(&["--format", "json", "check-category", "--category", s(&fixture("vec_z2_sign"))]);
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8(o.stdout).unwrap();
    let r = Report::from_json(&text).unwrap();
    assert!(r.passed() && !r.checks.is_empty());
    let again = monadal_cli::pipelines::emit_report(&r, monadal_cli::pipelines::Format::Json);
    assert_eq!(again, text);
}

#[test]
fn double_dumps_are_deterministic() {
    let (a, b) = (scratch("double_a"), scratch("double_b"));
    for dir in [&a, &b] {
        let o = monadal(&["double", "--category", s(&fixture("vec_z2")), "--monad", "identity", "--out", s(dir)]);
        assert_eq!(o.status.code(), Some(0));
    }
    for f in ["report.txt", "double.json"] {
        assert_eq!(std::fs::read(a.join(f)).unwrap(), std::fs::read(b.join(f)).unwrap(), "{f}");
    }
    let d: serde_json::Value = serde_json::from_slice(&std::fs::read(a.join("double.json")).unwrap()).unwrap();
    for key in ["D", "R", "Omega"] {
        assert!(d.get(key).is_some(), "{key}");
    }
}

#[test]
fn coend_and_double_algebra_dumps() {
    let d = scratch("coend");
    let o = monadal(&["coend", "--category", s(&fixture("vec_s3")), "--out", s(&d)]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(d.join("coend.json")).unwrap()).unwrap();
    assert_eq!(v["carrier"].as_array().unwrap().len(), 36);
    let d = scratch("double_algebra");
    let o = monadal(&["double-algebra", "--category", s(&fixture("vec")), "--hopf", s(&fixture("kz2")), "--out", s(&d)]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(d.join("double_algebra.json")).unwrap()).unwrap();
    assert_eq!(v["D(A)"]["carrier"].as_array().unwrap().len(), 4);
}

#[test]
fn thread_count_does_not_change_output() {
    let (a, b) = (scratch("threads_1"), scratch("threads_2"));
    for (dir, n) in [(&a, "1"), (&b, "2")] {
        let o = Command::new(env!("CARGO_BIN_EXE_monadal"))
            .env("MONADAL_THREADS", n)
            .args(["coend", "--braided", "--category", s(&fixture("vec_z3_f7")), "--out", s(dir)])
            .output()
            .unwrap();
        assert_eq!(o.status.code(), Some(0));
    }
    assert_eq!(std::fs::read(a.join("coend.json")).unwrap(), std::fs::read(b.join("coend.json")).unwrap());
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(a.join("coend.json")).unwrap()).unwrap();
    assert_eq!(v["omega_trivial"], serde_json::json!(false));
}
