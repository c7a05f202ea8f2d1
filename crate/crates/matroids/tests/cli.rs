//! End-to-end checks of the command-line interface: exit codes, output
//! shapes, and file round trips.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_matroids"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("matroids-cli-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn check_reports_value_through_exit_code() {
    let w4 = tmp("w4.txt");
    assert!(run(&["construct", "wheel", "4", "-o", w4.to_str().unwrap()]).status.success());

    let out = run(&["check", w4.to_str().unwrap(), "--k", "3", "--prop", "superminimal"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        r#"{"prop":"superminimal","k":3,"value":true}"#
    );

    let out = run(&["check", w4.to_str().unwrap(), "--k", "4", "--prop", "connected"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("\"value\":false"));

    // Brittleness needs a simple matroid; a wheel qualifies, a loop does not.
    let out = run(&["check", w4.to_str().unwrap(), "--prop", "brittle"]);
    assert_eq!(out.status.code(), Some(1));
    std::fs::remove_file(&w4).ok();
}

#[test]
fn construct_round_trips_through_props_and_iso() {
    let a = tmp("u24-a.txt");
    let b = tmp("u24-b.txt");
    assert!(run(&["construct", "uniform", "2", "4", "-o", a.to_str().unwrap()]).status.success());
    assert!(run(&["construct", "whirl", "2", "-o", b.to_str().unwrap()]).status.success());

    let out = run(&["iso", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), r#"{"isomorphic":true}"#);

    let out = run(&["props", a.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let line = String::from_utf8_lossy(&out.stdout);
    assert!(line.starts_with(r#"{"cf":"cf1:n4-r2-fc","n":4,"r":2,"3c":true"#), "{line}");

    let w5 = tmp("w5.txt");
    assert!(run(&["construct", "wheel", "5", "-o", w5.to_str().unwrap()]).status.success());
    let out = run(&["iso", a.to_str().unwrap(), w5.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));

    for p in [a, b, w5] {
        std::fs::remove_file(&p).ok();
    }
}

#[test]
fn census_writes_sorted_ndjson() {
    let out = run(&["census", "--nmax", "4", "--filter", "3connected"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 6);
    assert!(lines[0].starts_with(r#"{"cf":"cf1:n1-"#));
    assert!(lines[5].starts_with(r#"{"cf":"cf1:n4-r2-fc""#));
    let mut sorted = lines.clone();
    sorted.sort();
    assert_eq!(lines, sorted, "census is sorted by canonical form");

    // Writing to a file produces the same bytes.
    let path = tmp("census.ndjson");
    assert!(run(&["census", "--nmax", "4", "--filter", "3connected", "-o", path.to_str().unwrap()])
        .status
        .success());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), text);
    std::fs::remove_file(&path).ok();
}

#[test]
fn verify_single_suite_reports_to_stdout() {
    let out = run(&["verify", "--suite", "table1", "--nmax", "4", "--kmax", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let line = String::from_utf8_lossy(&out.stdout);
    assert!(line.starts_with(r#"{"suite":"table1","checked":31,"fails":0"#), "{line}");
    assert!(String::from_utf8_lossy(&out.stderr).is_empty());
}

#[test]
fn usage_errors_exit_2_with_message_on_stderr() {
    for args in [
        &["--definitely-not-a-flag"][..],
        &["check"][..],
        &["check", "x.txt", "--prop", "bogus"][..],
        &["frobnicate"][..],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
        assert!(out.stdout.is_empty(), "stdout should be quiet for {args:?}");
        assert!(!out.stderr.is_empty(), "stderr should explain {args:?}");
    }

    let out = run(&["verify", "--suite", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown suite"));

    let out = run(&["census", "--filter", "bogus"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["props", "/definitely/not/a/file.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn capacity_errors_exit_3() {
    let out = run(&["construct", "whirl", "13"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("capacity"));

    let out = run(&["construct", "wheel", "40"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn malformed_matroid_file_exits_2() {
    let path = tmp("bad.txt");
    std::fs::write(&path, "matroid broken\nelements 3\ntype bases\nrank 2\n0,1\n0,7\n").unwrap();
    let out = run(&["props", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 6"));
    std::fs::remove_file(&path).ok();
}
