//! End-to-end runs of the `cqr` binary.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn cqr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cqr"))
        .args(args)
        .output()
        .expect("cqr runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn classify_reports_hinged() {
    let out = cqr(&["classify", "--a", "2,3", "--lambda", "4,1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["kind"], "Hinged");
    assert_eq!(v["schema"], "colored-quotient/1");
    assert_eq!(v["type"], "classification");
}

#[test]
fn enumerate_prints_a_space_file() {
    let out = cqr(&[
        "enumerate",
        "--d",
        "2",
        "--a",
        "1,2",
        "--lambda",
        "2,1",
        "--format",
        "text",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "x[2,1]^2\nx[1,1]*x[2,1]\nx[1,2]*x[2,1]\n"
    );
}

#[test]
fn verify_refutes_and_the_report_replays() {
    let out = cqr(&["verify", "--a", "2,1", "--lambda", "1,1"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["verdict"], "refuted");
    assert_eq!(v["witness"]["space"], serde_json::json!(["x[1,1]^2"]));
    assert_eq!(v["witness"]["shadow"], 1);
    assert_eq!(v["witness"]["segment_shadow"], 2);
    let path = scratch("refuted.json");
    fs::write(&path, &out.stdout).unwrap();
    assert_eq!(
        cqr(&["--check", path.to_str().unwrap()]).status.code(),
        Some(0)
    );
}

#[test]
fn tampered_reports_fail_replay() {
    let out = cqr(&["verify", "--a", "2,1", "--lambda", "1,1"]);
    let mut v = json(&out);
    v["witness"]["shadow"] = 2.into();
    let path = scratch("tampered.json");
    fs::write(&path, serde_json::to_vec(&v).unwrap()).unwrap();
    assert_eq!(
        cqr(&["--check", path.to_str().unwrap()]).status.code(),
        Some(1)
    );
}

#[test]
fn budget_exhaustion_exits_three_with_a_partial_report() {
    let out = cqr(&[
        "verify",
        "--a",
        "2,3",
        "--lambda",
        "2,3",
        "--max-degree",
        "3",
        "--max-piece",
        "12",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let v = json(&out);
    assert_eq!(v["exhaustive"], false);
    assert_eq!(v["verdict"], "verified-up-to-budget");
}

#[test]
fn counterexample_writes_a_space_file() {
    let space = scratch("counterexample.txt");
    let out = cqr(&[
        "counterexample",
        "--a",
        "1,2",
        "--lambda",
        "2,3",
        "--d",
        "2",
        "--space-out",
        space.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let members: Vec<&str> = v["space"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| m.as_str().unwrap())
        .collect();
    let file = fs::read_to_string(&space).unwrap();
    assert_eq!(file.lines().collect::<Vec<_>>(), members);
    assert!(v["shadow"].as_u64() < v["segment_shadow"].as_u64());
    let artifact = scratch("counterexample.json");
    fs::write(&artifact, &out.stdout).unwrap();
    assert_eq!(
        cqr(&["--check", artifact.to_str().unwrap()]).status.code(),
        Some(0)
    );
}

#[test]
fn ring_files_match_inline_flags() {
    let ring = scratch("ring.txt");
    fs::write(&ring, "# hinged\na = [2, 3]\nlambda = [4, 1]\n").unwrap();
    let from_file = cqr(&[
        "segment",
        "--ring",
        ring.to_str().unwrap(),
        "--d",
        "2",
        "--k",
        "4",
    ]);
    let inline = cqr(&[
        "segment", "--a", "2,3", "--lambda", "4,1", "--d", "2", "--k", "4",
    ]);
    assert_eq!(from_file.status.code(), Some(0));
    assert_eq!(from_file.stdout, inline.stdout);
}

#[test]
fn parse_errors_exit_one() {
    let out = cqr(&["classify", "--a", "2,x", "--lambda", "4,1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
    let missing = cqr(&[
        "shadow",
        "--a",
        "1",
        "--lambda",
        "2",
        "--space",
        "/nonexistent/space.txt",
    ]);
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn worker_count_never_changes_output() {
    let args = [
        "verify",
        "--a",
        "1,1,1",
        "--lambda",
        "2,2,3",
        "--max-degree",
        "3",
    ];
    let base = cqr(&args);
    for workers in ["1", "3"] {
        let mut with = args.to_vec();
        with.extend(["--workers", workers]);
        let out = cqr(&with);
        assert_eq!(out.status.code(), base.status.code());
        assert_eq!(out.stdout, base.stdout);
    }
}

#[test]
fn hunt_witness_replays() {
    let out = cqr(&["fvector", "hunt", "--a", "1,2", "--lambda", "2,3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["type"], "hunt-witness");
    let path = scratch("hunt.json");
    fs::write(&path, &out.stdout).unwrap();
    assert_eq!(
        cqr(&["--check", path.to_str().unwrap()]).status.code(),
        Some(0)
    );
}

#[test]
fn ring_flags_may_precede_the_subcommand() {
    let before = cqr(&["--a", "2,3", "--lambda", "4,1", "classify"]);
    let after = cqr(&["classify", "--a", "2,3", "--lambda", "4,1"]);
    assert_eq!(before.status.code(), Some(0));
    assert_eq!(before.stdout, after.stdout);
}

#[test]
fn check_rejects_a_subcommand() {
    let path = scratch("unused.json");
    fs::write(&path, "{}").unwrap();
    assert_eq!(
        cqr(&["--check", path.to_str().unwrap(), "classify"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(cqr(&[]).status.code(), Some(1));
}
