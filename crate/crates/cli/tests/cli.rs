use std::process::Command;

use heiscat::Report;
use heiscat_cli::{run_args, Exit};

fn run(args: &[&str]) -> Exit {
    run_args(std::iter::once("heiscat").chain(args.iter().copied()))
}

fn ok(args: &[&str]) -> String {
    let e = run(args);
    assert_eq!(e.code, 0, "{args:?}: {}{}", e.stdout, e.stderr);
    e.stdout
}

fn json(args: &[&str]) -> Report {
    let mut full = vec!["--format", "json", "--no-timing"];
    full.extend_from_slice(args);
    let e = run(&full);
    assert!(e.code <= 1, "{args:?}: {}", e.stderr);
    serde_json::from_str(&e.stdout).unwrap()
}

#[test]
fn normal_form_examples() {
    assert_eq!(ok(&["normal-form", "s1 c1", "--n", "2"]), "c2 s1\n");
    assert_eq!(ok(&["normal-form", "[w,1]"]), "[w,1]\n");
    assert_eq!(ok(&["normal-form", "q[1,1] p[1,1]"]), "p[1,1] q[1,1] + 2q + 2q^-1\n");
    assert_eq!(ok(&["multiply", "s1", "s1 c2"]), "c2\n");
    assert_eq!(ok(&["multiply", "q[1,1]", "p[1,1]"]), "p[1,1] q[1,1] + 2q + 2q^-1\n");
}

#[test]
fn dims_and_series_examples() {
    assert!(ok(&["dims", "--gamma", "2", "--n", "3"]).starts_with("24576\n"));
    assert_eq!(ok(&["series", "--a", "2", "--order", "6"]), "1, -4, 8, -12, 16, -20, 24\n");
    assert_eq!(ok(&["series", "--a", "-1", "--order", "3"]), "1, 2, 2, 2\n");
    let rep = json(&["dims", "--gamma", "1", "--n", "2"]);
    assert_eq!(rep.records[0].params.extra["result"], "128");
    assert_eq!(rep.records[0].checked_dimension, 128);
}

#[test]
fn full_sweep_at_level_one_passes() {
    let rep = json(&["verify", "--suite", "all", "--gamma", "1", "--nmax", "2"]);
    assert!(rep.holds(), "{rep}");
    let relation_records =
        rep.records.iter().filter(|r| r.suite.starts_with('H') || r.suite.starts_with("isotopy")).count();
    assert!(relation_records >= 26, "{relation_records}");
    for name in ["H1", "H10", "H20", "isotopy1", "isotopy6"] {
        assert!(rep.records.iter().any(|r| r.suite == name), "{name} missing");
    }
    assert_eq!(rep.config["gamma"], "1");
    assert_eq!(rep.config["nmax"], "2");
    assert_eq!(rep.schema, heiscat::report::SCHEMA_VERSION);
}

#[test]
fn verify_exit_codes_through_the_binary() {
    let bin = env!("CARGO_BIN_EXE_heiscat");
    let pass = Command::new(bin).args(["verify", "--suite", "h3,iso1", "--nmax", "1"]).output().unwrap();
    assert_eq!(pass.status.code(), Some(0));
    let fail = Command::new(bin)
        .args(["verify", "--suite", "iso1", "--nmax", "1", "--fault", "orientation"])
        .output()
        .unwrap();
    assert_eq!(fail.status.code(), Some(1));
    let usage = Command::new(bin).args(["verify", "--suite", "h21"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
    assert!(usage.stdout.is_empty());
}

#[test]
fn every_fault_is_caught() {
    for fault in ["orientation", "dot", "clifford", "whisker", "action", "tensor"] {
        let e = run(&["--no-timing", "verify", "--suite", "relations", "--nmax", "1", "--fault", fault]);
        assert_eq!(e.code, 1, "{fault} went undetected:\n{}", e.stdout);
        assert!(e.stdout.contains("FAIL"));
    }
}

#[test]
fn json_output_is_deterministic() {
    let args = [
        "--format",
        "json",
        "--no-timing",
        "--seed",
        "5",
        "verify",
        "--suite",
        "h3,iso2,confluence,crossing",
        "--nmax",
        "1",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    let rep: Report = serde_json::from_str(&a.stdout).unwrap();
    assert!(rep.records.iter().all(|r| r.elapsed_ms.is_none()));
    assert_eq!(rep.config["seed"], "5");
    let mut sorted = rep.clone();
    sorted.sort();
    assert_eq!(sorted, rep);
}

#[test]
fn timing_is_reported_unless_disabled() {
    let e = run(&["--format", "json", "verify", "--suite", "h3", "--nmax", "0"]);
    let rep: Report = serde_json::from_str(&e.stdout).unwrap();
    assert!(rep.records.iter().all(|r| r.elapsed_ms.is_some()));
}

fn usage_error(args: &[&str]) -> String {
    let e = run(args);
    assert_eq!(e.code, 2, "{args:?}: {}", e.stdout);
    assert!(e.stdout.is_empty(), "{args:?} printed {}", e.stdout);
    e.stderr
}

#[test]
fn configuration_errors_exit_before_work() {
    assert!(usage_error(&["--gamma", "0", "dims", "--n", "1"]).contains("gamma"));
    assert!(usage_error(&["--gamma", "7", "verify"]).contains("gamma"));
    assert!(usage_error(&["verify", "--nmax", "4"]).contains("nmax"));
    assert!(usage_error(&["verify", "--suite", "h99"]).contains("h99"));
    assert!(usage_error(&["verify", "--suite", "h9", "--nmax", "0"]).contains("admissible"));
    assert!(usage_error(&["--cartan", "B2", "verify"]).contains("Cartan"));
    assert!(usage_error(&["dims", "--n", "4"]).contains("at most"));
    assert!(usage_error(&["series", "--a", "3", "--order", "4"]).contains("exponent"));
    assert!(usage_error(&["fock-check", "--kmax", "5"]).contains("truncation"));
    assert!(usage_error(&["verify", "--fault", "bogus"]).contains("bogus"));
    assert!(usage_error(&["--config", "/nonexistent/heiscat.toml", "verify"]).contains("cannot read"));
}

#[test]
fn parse_errors_carry_a_column() {
    let err = usage_error(&["normal-form", "s1 (c1 + 2"]);
    assert!(err.contains("column 11") && err.contains("')'"), "{err}");
    assert!(usage_error(&["normal-form", "s1 p[1,1]"]).contains("mixes"));
    assert!(usage_error(&["normal-form", "[1,1]", "--n", "3"]).contains("rank"));
}

fn write_config(name: &str, body: &str) -> String {
    let dir = std::env::temp_dir().join(format!("heiscat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.display().to_string()
}

#[test]
fn config_file_is_read_and_flags_override_it() {
    let path = write_config("ok.toml", "gamma = 2\nformat = \"json\"\ntiming = false\n[cartan]\ntype_a = 3\n");
    let e = run(&["--config", &path, "dims", "--n", "1"]);
    assert_eq!(e.code, 0, "{}", e.stderr);
    let rep: Report = serde_json::from_str(&e.stdout).unwrap();
    assert_eq!(rep.records[0].params.extra["result"], "16");
    assert_eq!(rep.config["cartan"], "A3");
    assert!(rep.records[0].elapsed_ms.is_none());
    let e = run(&["--config", &path, "--gamma", "1", "--format", "text", "dims", "--n", "1"]);
    assert!(e.stdout.starts_with("8\n"), "{}", e.stdout);
}

#[test]
fn config_file_errors() {
    let unknown = write_config("unknown.toml", "gama = 2\n");
    assert!(usage_error(&["--config", &unknown, "verify"]).contains("gama"));
    let caps = write_config("caps.toml", "[caps]\nmax_rank = 9\nmax_gamma = 6\nmax_truncation = 12\n");
    assert!(usage_error(&["--config", &caps, "verify"]).contains("caps"));
    let tight = write_config("tight.toml", "nmax = 2\n[caps]\nmax_rank = 1\nmax_gamma = 6\nmax_truncation = 12\n");
    assert!(usage_error(&["--config", &tight, "verify"]).contains("nmax"));
    let bad = write_config("cartan.toml", "[cartan]\nmatrix = [[2, -1], [0, 2]]\n");
    assert!(usage_error(&["--config", &bad, "verify"]).contains("Cartan"));
    let good = write_config(
        "matrix.toml",
        "[cartan]\nmatrix = [[2, -1, 0], [-1, 2, 0], [0, 0, 2]]\norientation = [[0, -1, 0], [1, 0, 0], [0, 0, 0]]\n",
    );
    assert_eq!(ok(&["--config", &good, "normal-form", "q[1,1] p[3,1]"]), "p[3,1] q[1,1]\n");
}

#[test]
fn fock_check_runs() {
    let out = ok(&["--no-timing", "fock-check", "--kmax", "2", "--max-len", "3", "--max-level", "2"]);
    assert!(out.contains("0 failed"), "{out}");
}

#[test]
fn help_exits_cleanly() {
    let e = run(&["--help"]);
    assert_eq!(e.code, 0);
    assert!(e.stdout.contains("normal-form"));
}
