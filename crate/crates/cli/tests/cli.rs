//! End-to-end tests of the `chromsym` binary: exit codes, output formats,
//! determinism across worker counts, and the JSON/table round trip.

use std::io::Write;
use std::process::{Command, Output};

use chromsym::homengine::ResultDoc;
use chromsym_cli::render::render_result;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_chromsym"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn homology_table_k2() {
    let out = run(&["homology", "--edges", "1-2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("Frob(q,t) = (1 + tq)·s[1,1]"), "got:\n{text}");
    assert!(text.contains("H_1"));
    assert!(text.contains("S[1,1]"));
}

#[test]
fn homology_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p3.txt");
    let mut f = std::fs::File::create(&path).unwrap();
    write!(f, "3 2\n1 2\n2 3\n").unwrap();
    let out = run(&["homology", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("tq·s[2,1] + (1 + 2tq + t^2q^2)·s[1,1,1]"));
}

#[test]
fn loop_fast_path() {
    let out = run(&["homology", "--edges", "1-2,2-2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("H_*(G) = 0"));
}

#[test]
fn xg_bases() {
    let out = run(&["xg", "--edges", "1-2,1-3,2-3", "--basis", "s"]);
    assert_eq!(stdout(&out).trim(), "X_G = 6·s[1,1,1]");
    let out = run(&["xg", "--edges", "1-2,2-3", "--basis", "p"]);
    assert_eq!(stdout(&out).trim(), "X_G = p[3] - 2·p[2,1] + p[1,1,1]");
    let out = run(&["xg", "--edges", "1-2", "--basis", "m"]);
    assert_eq!(stdout(&out).trim(), "X_G = 2·m[1,1]");
}

#[test]
fn json_is_byte_identical_across_worker_counts() {
    let base = run(&["homology", "--edges", "1-2,1-3,2-3", "--format", "json", "--workers", "1"]);
    for workers in ["2", "4"] {
        let other = run(&[
            "homology", "--edges", "1-2,1-3,2-3", "--format", "json", "--workers", workers,
        ]);
        assert_eq!(base.stdout, other.stdout, "workers = {workers}");
    }
    // and across repeated runs
    let again = run(&["homology", "--edges", "1-2,1-3,2-3", "--format", "json", "--workers", "1"]);
    assert_eq!(base.stdout, again.stdout);
}

#[test]
fn table_round_trips_through_json() {
    // parsing the structured JSON and re-rendering reproduces the printed table
    let json = stdout(&run(&["homology", "--edges", "1-2,1-3,2-3", "--format", "json"]));
    let doc: ResultDoc = serde_json::from_str(&json).unwrap();
    let table = stdout(&run(&["homology", "--edges", "1-2,1-3,2-3"]));
    assert_eq!(render_result(&doc), table);
}

#[test]
fn verify_passes_on_k3() {
    let out = run(&["verify", "--edges", "1-2,1-3,2-3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for name in ["d2", "decat", "euler", "loop", "multiedge", "union", "triangle", "relabel"] {
        assert!(text.contains(&format!("check {name}")), "missing {name}:\n{text}");
    }
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_doubled_edge() {
    let out = run(&["verify", "--edges", "1-2,1-2", "--checks", "multiedge,decat,euler"]);
    assert!(out.status.success());
    assert!(!stdout(&out).contains("FAIL"));
}

#[test]
fn verify_json_is_a_full_result_doc() {
    let out = run(&["verify", "--edges", "1-2", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["checks"]["decat"], true);
    assert_eq!(doc["checks"]["euler"], true);
    assert_eq!(doc["graph"]["n"], 2);
    assert!(doc["homology"].is_array());
    assert!(doc["frobenius"]["rendered"].is_string());
}

#[test]
fn verify_check_selection() {
    let out = run(&["verify", "--edges", "1-2", "--checks", "decat,euler"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("check decat"));
    assert!(text.contains("check euler"));
    assert!(!text.contains("check loop"));

    let out = run(&["verify", "--edges", "1-2", "--checks", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    // parse failure → 2
    let out = run(&["homology", "/nonexistent/graph.txt"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["homology", "--edges", "1+2"]);
    assert_eq!(out.status.code(), Some(2));
    // guard → 3
    let out = run(&["homology", "--edges", "1-2", "--max-n", "1"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["homology", "--edges", "1-2,1-3,2-3", "--max-dim", "10"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn sweep_trees() {
    let out = run(&["sweep", "--n", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    // two trees (path and star) plus the collision report
    assert_eq!(lines.len(), 3);
    let report: serde_json::Value = serde_json::from_str(lines[2]).unwrap();
    assert_eq!(report["graphs"], 2);
    assert_eq!(report["collisions"].as_array().unwrap().len(), 0);

    let out = run(&["sweep", "--n", "2"]);
    let lines: Vec<String> = stdout(&out).lines().map(String::from).collect();
    assert_eq!(lines.len(), 2);

    // distinct trees on 5 vertices give pairwise distinct series
    let out = run(&["sweep", "--n", "5"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    let report: serde_json::Value = serde_json::from_str(lines[3]).unwrap();
    assert_eq!(report["graphs"], 3);
    assert_eq!(report["collisions"].as_array().unwrap().len(), 0);
}

#[test]
fn sweep_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("trees.txt");
    let mut f = std::fs::File::create(&path).unwrap();
    write!(f, "1-2,2-3,3-4\n1-2,1-3,1-4\n").unwrap();
    let out = run(&["sweep", "--trees", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 3);
}
