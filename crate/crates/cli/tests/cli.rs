//! The `hyperex` binary end to end: outputs, exit codes and files.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn hyperex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperex")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn edge_count(text: &str) -> usize {
    text.lines().next().unwrap().split_whitespace().nth(2).unwrap().parse().unwrap()
}

fn write(dir: &Path, name: &str, args: &[&str]) -> String {
    let o = hyperex(args);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let path = dir.join(name);
    std::fs::write(&path, o.stdout).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn construct_complete_graph() {
    let o = hyperex(&["construct", "complete", "4", "2"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.starts_with("2 4 6\n"));
    assert_eq!(text.lines().count(), 7);
}

#[test]
fn construct_join_of_two_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.txt", &["construct", "complete", "3", "2"]);
    let b = write(dir.path(), "b.txt", &["construct", "path", "2"]);
    let o = hyperex(&["construct", "join", &a, &b]);
    assert_eq!(code(&o), 0);
    // K3 join K2 is K5
    assert_eq!(edge_count(&stdout(&o)), 10);
}

#[test]
fn first_construction_for_triangles() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out");
    let o = hyperex(&["--out", out.to_str().unwrap(), "construct", "g1", "K3", "13", "1"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    // C(13,2) - C(12,2) + floor(144/4)
    assert_eq!(edge_count(&stdout(&o)), 12 + 36);
    let file = std::fs::read_to_string(out.join("construct.txt")).unwrap();
    assert_eq!(file, stdout(&o));
}

#[test]
fn solve_modes() {
    let o = hyperex(&["solve", "C5", "K2", "--mode", "nu"]);
    assert_eq!(json(&o)["nu"], 2);
    let o = hyperex(&["solve", "2xK3", "K3", "--mode", "free:1"]);
    assert_eq!(json(&o)["free"], false);
    let dir = tempfile::tempdir().unwrap();
    let t = write(dir.path(), "t.txt", &["construct", "turan", "8", "2"]);
    let o = hyperex(&["solve", &t, "K3"]);
    assert_eq!(json(&o)["contains"], false);
}

#[test]
fn bounds_reports() {
    let o = hyperex(&["bounds", "kst", "16", "2", "2"]);
    assert_eq!(code(&o), 0);
    // 1/2 * 16^{3/2} + 1/2 * 16
    assert_eq!(json(&o)["floor"], 40);
    let o = hyperex(&["bounds", "interval3-graph", "K2,2", "24", "5"]);
    assert_eq!(code(&o), 0);
    assert!(json(&o)["preconditions"].is_array());
}

#[test]
fn first_construction_at_t_zero_is_the_turan_number() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("ex.jsonl");
    let table = table.to_str().unwrap();
    let o = hyperex(&["--ex-table", table, "search", "ex", "K3", "5"]);
    assert_eq!(code(&o), 0);
    let o = hyperex(&["--ex-table", table, "bounds", "g1", "K3", "5", "0"]);
    assert_eq!(json(&o)["floor"], 6);
}

#[test]
fn search_targets() {
    let o = hyperex(&["search", "ex", "K3", "5"]);
    assert_eq!(json(&o)["outcome"]["optimum"], 6);
    let o = hyperex(&["search", "packing", "K2", "7", "2"]);
    assert_eq!(json(&o)["outcome"]["optimum"], 11);
    let o = hyperex(&["search", "star", "K2,2", "2", "6"]);
    assert_eq!(json(&o)["outcome"]["status"], "exact");
    let o = hyperex(&["search", "zar", "2,2", "3", "3"]);
    assert_eq!(json(&o)["outcome"]["optimum"], 6);
}

#[test]
fn zero_budget_exits_three() {
    let o = hyperex(&["--node-cap", "0", "search", "ex", "K3", "6"]);
    assert_eq!(code(&o), 3);
    assert_eq!(json(&o)["outcome"]["status"], "lower");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&hyperex(&["search", "ex", "NOPE", "5"])), 2);
    assert_eq!(code(&hyperex(&["bounds", "kst", "x", "2", "2"])), 2);
    assert_eq!(code(&hyperex(&["solve", "K3", "K2", "--mode", "sideways"])), 2);
}

#[test]
fn empty_matrix_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("empty.json");
    std::fs::write(&config, "{}").unwrap();
    let o = hyperex(&["verify", config.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(json(&o)["summary"]["total"], 0);
}

#[test]
fn failing_checks_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("bad.jsonl");
    let lines = [(3, 1), (4, 5), (5, 3)]
        .iter()
        .map(|(n, v)| format!(r#"{{"family":"K3","variant":"plain","n":{n},"value":{v},"status":"exact"}}"#))
        .collect::<Vec<_>>()
        .join("\n");
    std::fs::write(&table, lines).unwrap();
    let config = dir.path().join("monotone.json");
    std::fs::write(&config, r#"{"groups": [{"group": "monotone"}]}"#).unwrap();
    let out = dir.path().join("out");
    let o = hyperex(&[
        "--ex-table",
        table.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
        "verify",
        config.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 1, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(out.join("report.json").is_file());
    assert!(out.join("report.csv").is_file());
}

#[test]
fn scan_for_c4() {
    let dir = tempfile::tempdir().unwrap();
    let o = hyperex(&["--out", dir.path().to_str().unwrap(), "scan", "K2,2", "10", "--t-max", "2"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "t,bound,exact,construction");
    assert_eq!(lines.len(), 4);
    // ex(10, C4) = 16; exact values for 2C4 and 3C4 come from the search
    let search = |t: &str| json(&hyperex(&["search", "packing", "K2,2", "10", t]))["outcome"]["optimum"].clone();
    assert_eq!(lines[1].split(',').nth(2).unwrap(), "16");
    assert_eq!(lines[2].split(',').nth(2).unwrap(), search("1").to_string());
    assert_eq!(lines[3].split(',').nth(2).unwrap(), search("2").to_string());
    assert_eq!(std::fs::read_to_string(dir.path().join("scan.csv")).unwrap(), text);
}
