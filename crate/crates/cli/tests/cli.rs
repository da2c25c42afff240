use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const TAU1: &str = r#"{"points":["a","b","c"],"opens":[[],["a"],["b"],["a","b"],["a","c"],["a","b","c"]]}"#;
const F5: &str = r#"{"points":["a","b","c"],"opens":[[],["a"],["c"],["a","c"],["a","b","c"]],
  "operation":{"builtin":"interior-closure"}}"#;
const GAMMA2: &str = r#"{"table":{"[a,b]":["a","b","c"]},"fill":"identity"}"#;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gammatop"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

#[test]
fn enumerate_counts() {
    let o = run(&["enumerate", "--n", "3", "--count-only"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "29");
    let o = run(&["enumerate", "--n", "2"]);
    assert_eq!(stdout(&o).lines().count(), 4);
    let o = run(&["enumerate", "--n", "9", "--count-only"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn show_semi_boundary_from_file() {
    let dir = TempDir::new().unwrap();
    let f5 = write(dir.path(), "f5.json", F5);
    let f5 = f5.to_str().unwrap();
    let o = run(&["show", "--space", f5, "--what", "sbd", "--set", "{a,c}"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "{b}");
    let o = run(&["show", "--space", f5, "--what", "sbd", "--set", "{a}"]);
    assert_eq!(stdout(&o).trim(), "{}");
    let o = run(&["show", "--space", f5, "--what", "so"]);
    assert_eq!(stdout(&o).trim(), "[{}, {a}, {a,b}, {c}, {a,c}, {b,c}, {a,b,c}]");
    let o = run(&["show", "--space", f5, "--what", "classify"]);
    assert!(stdout(&o).contains("semi-regular (cap): false"));
    let o = run(&["--json", "show", "--space", f5, "--what", "scl", "--set", "{b}"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v, serde_json::json!(["b"]));
}

#[test]
fn bundles_default_and_override_the_operation() {
    let dir = TempDir::new().unwrap();
    let tau1 = write(dir.path(), "tau1.json", TAU1);
    let g2 = write(dir.path(), "g2.json", GAMMA2);
    let tau1 = tau1.to_str().unwrap();
    let with = |extra: &[&str]| {
        let mut args = vec!["show", "--space", tau1, "--what", "tau-gamma"];
        args.extend_from_slice(extra);
        stdout(&run(&args))
    };
    let fid = stdout(&run(&["show", "--space", "Fid", "--what", "tau-gamma"]));
    let f1 = stdout(&run(&["show", "--space", "F1", "--what", "tau-gamma"]));
    assert_eq!(with(&[]), fid);
    assert_eq!(with(&["--op", g2.to_str().unwrap()]), f1);
}

#[test]
fn input_errors_exit_2_and_name_the_field() {
    let dir = TempDir::new().unwrap();
    let no_full = write(dir.path(), "bad.json", r#"{"points":["a","b"],"opens":[[],["a"]]}"#);
    let o = run(&["show", "--space", no_full.to_str().unwrap(), "--what", "so"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("empty set and the whole universe"), "{}", stderr(&o));

    let bad_label = write(dir.path(), "lab.json", r#"{"points":["a"],"opens":[[],["a"],["q"]]}"#);
    let o = run(&["show", "--space", bad_label.to_str().unwrap(), "--what", "so"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("$.opens[2][0]"), "{}", stderr(&o));

    let o = run(&["show", "--space", "missing.json", "--what", "so"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["check", "--claim", "T9.9", "--space", "F1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("T9.9"));
    let o = run(&["show", "--space", "F1", "--what", "nonsense"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["show", "--space", "F1", "--what", "so", "--bogus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_exit_codes() {
    let o = run(&["check", "--claim", "T3.14", "--space", "Fid"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.contains("CONFIRMED")).count(), 3);
    let o = run(&["check", "--claim", "E3.2a", "--space", "F1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("REFUTED"));
    let o = run(&["check", "--claim", "T3.24", "--space", "F5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("VACUOUS"));
    let o = run(&["check", "--claim", "T3.24", "--space", "F5", "--drop", "semi-regular"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("A={a,b} B={b,c}"));
}

#[test]
fn check_with_a_map_file() {
    let dir = TempDir::new().unwrap();
    let swap = write(dir.path(), "swap.json", r#"{"assign":{"a":"c","b":"b","c":"a"}}"#);
    let swap = swap.to_str().unwrap();
    let o = run(&["--json", "check", "--claim", "T4.8", "--space", "Fid", "--codomain", "Fid", "--map", swap]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
    assert_eq!(v[0]["maps"]["mode"], "fixed");
    let bad = write(dir.path(), "bad.json", r#"{"assign":{"a":"c"}}"#);
    let o = run(&["check", "--claim", "T4.2", "--space", "Fid", "--map", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("$.assign"));
}

#[test]
fn search_exit_codes() {
    let o = run(&["search", "--claim", "T3.24", "--drop", "semi-regular", "--max-n", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness: A="));
    let o = run(&["search", "--claim", "T3.14", "--max-n", "3", "--domain", "builtins"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("EXHAUSTED(102)"));
    let o = run(&["search", "--claim", "T3.14.1", "--budget", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("EXHAUSTED(0)"));
}

#[test]
fn audit_is_reproducible() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let o1 = run(&["audit", "--sweep-max-n", "2", "--out", a.to_str().unwrap()]);
    let o2 = run(&["audit", "--sweep-max-n", "2", "--out", b.to_str().unwrap()]);
    assert_eq!(o1.status.code(), Some(0));
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_eq!(o1.stdout, o2.stdout);
    let report: serde_json::Value = serde_json::from_slice(&fs::read(&a).unwrap()).unwrap();
    assert!(report["errata"].as_array().unwrap().iter().any(|e| e["claim"] == "E3.2a"));
}
