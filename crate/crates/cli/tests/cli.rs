use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn coconn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coconn")).args(args).output().unwrap()
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

#[test]
fn false_verdict_exits_one_with_witness() {
    let out = coconn(&["check", "vd", "--family", "cycle", "--n", "5", "--r", "2", "--quiet"]);
    assert_eq!(out.status.code(), Some(1));
    let v = &json_lines(&out)[0];
    assert_eq!(v["verdict"], false);
    assert_eq!(v["witness"]["kind"], "no_shedding_order");
}

#[test]
fn true_verdict_carries_certificate() {
    let out = coconn(&["check", "shell", "--edges", &data("gap_free_example.txt"), "--r", "3", "--quiet"]);
    assert_eq!(out.status.code(), Some(0));
    let v = &json_lines(&out)[0];
    assert_eq!(v["certificate"]["kind"], "shelling_order");
    assert_eq!(v["certificate"]["facets"].as_array().unwrap().len(), 26);
}

#[test]
fn one_indexed_shifts_labels_only() {
    let out = coconn(&["build", "sigma", "--graph6", "Dhc", "--r", "2", "--A", "1", "--one-indexed", "--quiet"]);
    assert_eq!(out.status.code(), Some(0));
    let v = &json_lines(&out)[0];
    assert_eq!(v["r"], 2);
    assert_eq!(v["a"], serde_json::json!([1]));
    assert_eq!(v["facets"], serde_json::json!([[2, 3], [3, 4], [4, 5]]));
}

#[test]
fn table_goes_to_stderr_unless_json_has_a_file() {
    let out = coconn(&["check", "gapfree", "--family", "cycle", "--n", "6", "--r", "2"]);
    assert_eq!(json_lines(&out).len(), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("verdict"));

    let dir = std::env::temp_dir().join(format!("coconn-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("out.jsonl");
    let out = coconn(&["check", "gapfree", "--family", "cycle", "--n", "6", "--r", "2", "--output", file.to_str().unwrap()]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("verdict"));
    let written = std::fs::read_to_string(&file).unwrap();
    assert_eq!(written.lines().count(), 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(coconn(&["check", "vd", "--bogus"]).status.code(), Some(2));
    assert_eq!(coconn(&["check", "vd", "--family", "cycle", "--n", "5", "--r", "0"]).status.code(), Some(2));
    let out = coconn(&["build", "sigma", "--family", "cycle", "--n", "5", "--r", "2", "--A", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn skipped_instances_exit_three() {
    let out = coconn(&[
        "verify", "family", "--family", "cycle", "--n", "6", "--r", "2", "--max-shelling-facets", "2", "--quiet",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("lowered from 128 to 2"));
    assert!(json_lines(&out).iter().any(|v| v.get("skipped").is_some()));
}

#[test]
fn scan_is_deterministic() {
    let args = ["scan", "--max-n", "5", "--r", "2", "--fields", "Q", "--quiet", "--all"];
    let a = coconn(&args);
    let b = coconn(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let summary = json_lines(&a).pop().unwrap();
    assert_eq!(summary["graphs_scanned"], 31);
    assert_eq!(summary["confirmed"], 0);
}
