use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::NamedTempFile;

const Q5_N18: &str = r#"{"q": 5, "n": 18, "s": -1, "roots": [2, 4], "v": [[2, 3], [-3, 2]], "kind": "type1",
  "expect": {"length": 36, "dimension": 18, "distance": 4, "flags": ["self_dual"]}}"#;

fn duadic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_duadic"))
        .args(args)
        .env_remove("DUADIC_BUDGET")
        .env_remove("DUADIC_COLUMN_BUDGET")
        .output()
        .expect("binary runs")
}

fn manifest(text: &str) -> NamedTempFile {
    let mut file = NamedTempFile::new().unwrap();
    file.write_all(text.as_bytes()).unwrap();
    file
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).expect("each line is JSON"))
        .collect()
}

#[test]
fn split_lists_the_smallest_example() {
    let out = duadic(&["split", "--q", "5", "--n", "2", "--kind", "type1"]);
    assert!(out.status.success());
    let v = &json_lines(&out)[0];
    assert_eq!(v["splittings"][0]["A"], serde_json::json!([1]));
    assert_eq!(v["splittings"][0]["B"], serde_json::json!([3]));
}

#[test]
fn split_filters_by_multiplier_without_duplicates() {
    let out = duadic(&[
        "split", "--q", "13", "--n", "6", "--kind", "type2", "--s", "5",
    ]);
    assert!(out.status.success());
    let v = &json_lines(&out)[0];
    let splits = v["splittings"].as_array().unwrap();
    assert!(!splits.is_empty());
    let mut parts: Vec<&Value> = splits.iter().map(|s| &s["A"]).collect();
    let before = parts.len();
    parts.dedup();
    assert_eq!(parts.len(), before);
    assert!(splits
        .iter()
        .all(|s| s["s"] == 5 && s["X"] == serde_json::json!([3, 9])));
}

#[test]
fn matching_row_exits_zero() {
    let file = manifest(Q5_N18);
    let out = duadic(&["run", "--manifest", file.path().to_str().unwrap()]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let report = &json_lines(&out)[0];
    assert_eq!(report["pass"], true);
    assert_eq!(report["distance"]["exact"], 4);
    assert_eq!(report["flags"]["self_dual"], true);
}

#[test]
fn mismatched_expectation_exits_one() {
    let file = manifest(&Q5_N18.replace("\"dimension\": 18", "\"dimension\": 17"));
    let out = duadic(&["run", "--manifest", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json_lines(&out)[0]["pass"], false);
}

#[test]
fn repeated_roots_exit_two() {
    let file = manifest(&Q5_N18.replace("[2, 4]", "[2, 2]"));
    let out = duadic(&["build", "--manifest", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("repeated root"));
}

#[test]
fn unreadable_manifest_exits_two() {
    let out = duadic(&["check", "--manifest", "/nonexistent/manifest.json"]);
    assert_eq!(out.status.code(), Some(2));
    let file = manifest("{\"q\": 5}");
    let out = duadic(&["check", "--manifest", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn zero_budget_reports_bounds_only() {
    let file = manifest(Q5_N18);
    let out = duadic(&[
        "mindist",
        "--manifest",
        file.path().to_str().unwrap(),
        "--budget",
        "0",
    ]);
    assert!(out.status.success());
    let d = &json_lines(&out)[0]["distance"];
    assert_eq!(d["method"], "bounds");
    assert!(d["exact"].is_null());
    assert!(d["lower"].as_u64().unwrap() <= 4 && d["upper"].as_u64().unwrap() >= 4);
}

#[test]
fn check_and_build_describe_the_image() {
    let file = manifest(Q5_N18);
    let path = file.path().to_str().unwrap();
    let check = json_lines(&duadic(&["check", "--manifest", path]))[0].clone();
    assert_eq!(check["length"], 36);
    assert_eq!(check["dimension"], 18);
    assert_eq!(check["flags"]["self_dual"], true);
    let build = json_lines(&duadic(&["build", "--manifest", path]))[0].clone();
    assert_eq!(build["size_exponent"], 18);
    assert_eq!(build["components"].as_array().unwrap().len(), 2);
}

#[test]
fn table_output_is_deterministic() {
    let args = ["table", "--which", "2", "--budget", "0"];
    let first = duadic(&args);
    let second = duadic(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(json_lines(&first).len(), 19);
}

#[test]
fn unknown_table_is_rejected() {
    assert_eq!(duadic(&["table", "--which", "3"]).status.code(), Some(2));
}
