use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const QS: &str = r#"{"d": 6, "n": 3, "hyperplanes": [[1,2,3],[1,5,6],[3,4,5],[2,4,6]]}"#;
const CHAIN: &str = r#"{"d": 8, "n": 4, "hyperplanes": [[1,2,3,4],[3,4,5,6],[5,6,7,8],[1,3,5,7]]}"#;

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_realspace")).args(args).output().unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn naive_dimension_of_quadrilateral() {
    let dir = TempDir::new().unwrap();
    let qs = write(&dir, "qs.json", QS);
    let out = run(&["naive-dim", "--matroid", arg(&qs)]);
    assert!(out.status.success());
    assert_eq!(json_of(&out)["naive_dim"], 14);
}

#[test]
fn type_vector_along_given_order() {
    let dir = TempDir::new().unwrap();
    let qs = write(&dir, "qs.json", QS);
    let out = run(&["type", "--matroid", arg(&qs), "--order", "2,3,5,6,1,4"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["tau"], serde_json::json!([3, 3, 3, 3, 1, 1]));
    assert_eq!(v["tau_tilde"], serde_json::json!([3, 3, 3, 3, 1, 1]));
}

#[test]
fn axiom_violation_exits_one() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.json", r#"{"d": 4, "circuits": [[1,2],[1,2,3]]}"#);
    let out = run(&["validate", "--matroid", arg(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json_of(&out)["error"], "AxiomViolation");
}

#[test]
fn invalid_split_document_names_condition() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "s.json", r#"{"d": 4, "n": 3, "edges": [{"set": [1,2], "rank": 2}]}"#);
    let out = run(&["validate", "--matroid", arg(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    let v = json_of(&out);
    assert_eq!(v["error"], "InvalidHypergraph");
    assert_eq!(v["violations"][0]["condition"], "edge_size");
}

#[test]
fn syntax_error_reports_position() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.json", "{\n  \"d\": 3,\n  \"circuits\": [[1,2]\n}");
    let out = run(&["validate", "--matroid", arg(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    let v = json_of(&out);
    assert_eq!(v["error"], "ParseError");
    assert_eq!((v["line"].as_u64(), v["column"].as_u64()), (Some(4), Some(1)));
}

#[test]
fn missing_file_and_usage_errors() {
    let out = run(&["naive-dim", "--matroid", "/nonexistent/m.json"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json_of(&out)["error"], "FileNotFound");
    let out = run(&["type", "--matroid", "x.json", "--order", "1,a"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_lists_schemas() {
    let out = run(&["--help"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for key in ["\"circuits\"", "\"hyperplanes\"", "\"edges\"", "\"vectors\"", "nonvanishing"] {
        assert!(text.contains(key), "{key}");
    }
}

#[test]
fn realize_then_verify_round_trip() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "chain.json", CHAIN);
    let pm = dir.path().join("pm.json");
    let out = run(&["realize", "--matroid", arg(&m), "--order", "1,2,3,5,4,6,7,8", "--out", arg(&pm)]);
    assert!(out.status.success());
    assert_eq!(json_of(&out)["params"], 12);
    let args = ["verify", "--matroid", arg(&m), "--pm", arg(&pm), "--samples", "10", "--seed", "3"];
    let first = run(&args);
    assert!(first.status.success());
    let v = json_of(&first);
    assert_eq!(v["all_passed"], true);
    assert_eq!(v["passed"], 10);
    assert_eq!(run(&args).stdout, first.stdout);
}

#[test]
fn realize_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let qs = write(&dir, "qs.json", QS);
    let a = run(&["realize", "--matroid", arg(&qs)]);
    let b = run(&["realize", "--matroid", arg(&qs)]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json_of(&a)["params"].as_array().unwrap().len(), 14 - 9);
}

#[test]
fn rigidity_commands() {
    let dir = TempDir::new().unwrap();
    let qs = write(&dir, "qs.json", QS);
    let v = json_of(&run(&["rigid", "--matroid", arg(&qs), "--order", "2,3,5,6,1,4"]));
    assert_eq!((v["sum_tau_tilde"].as_i64(), v["threshold"].as_i64()), (Some(14), Some(14)));
    assert_eq!(v["rigid_criterion"], true);
    let v = json_of(&run(&["inductively-rigid", "--matroid", arg(&qs)]));
    assert_eq!(v["inductively_rigid"], true);
    assert_eq!(v["basis"], "characterization");
}

#[test]
fn orderings_and_codimension() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "chain.json", CHAIN);
    let v = json_of(&run(&["inductively-connected", "--matroid", arg(&m)]));
    assert_eq!(v["inductively_connected"], true);
    let v = json_of(&run(&["find-order", "--matroid", arg(&m), "--greedy"]));
    assert_eq!(v["order"].as_array().unwrap().len(), 8);
    let out = run(&["expected-codim", "--matroid", arg(&m), "--family", "hypergraph"]);
    assert!(out.status.success());
}
