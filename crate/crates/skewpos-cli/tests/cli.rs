use std::process::{Command, Output};

use serde_json::Value;

fn skewpos(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewpos")).args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn inspect_running_example() {
    let out = skewpos(&["inspect", "--diagram", "running"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let neck: Vec<Vec<usize>> = serde_json::from_value(v["necklace"].clone()).unwrap();
    assert_eq!(neck[0], vec![1, 6, 8, 11, 12]);
    assert_eq!(neck[4], vec![3, 4, 5, 11, 12]);
    assert_eq!(neck[11], vec![5, 6, 8, 11, 12]);
    let f: Vec<i64> = serde_json::from_value(v["f"].clone()).unwrap();
    assert_eq!(f, vec![3, 4, 6, 7, 13, 14, 9, 17, 10, 12, 20, 23]);
}

#[test]
fn inspect_full_mu_has_empty_braid() {
    let out = skewpos(&["inspect", "--diagram", r#"{"n":6,"k":3,"lambda":[2,1],"mu":[2,1]}"#]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["braid"]["letters"], serde_json::json!([]));
    assert_eq!(v["labels"], serde_json::json!({}));
}

#[test]
fn mu_not_in_lambda_is_input_error() {
    let out = skewpos(&["inspect", "--diagram", r#"{"n":6,"k":3,"lambda":[2,1],"mu":[2,2]}"#]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("row 2"), "{err}");
}

#[test]
fn missing_file_is_input_error() {
    assert_eq!(skewpos(&["inspect", "--diagram", "/nonexistent.json"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let a = skewpos(&["sample", "--diagram", "intro", "--seed", "7"]);
    let b = skewpos(&["sample", "--diagram", "intro", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json_of(&a)["seed"], 7);
}

#[test]
fn sampled_point_feeds_splice() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.json");
    let p = path.to_str().unwrap();
    let out = skewpos(&["sample", "--diagram", "intro", "--seed", "3", "--out", p]);
    assert_eq!(out.status.code(), Some(0));
    let out = skewpos(&["splice", "--point", p, "--column", "6"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json_of(&out);
    assert_eq!(v["left_member"], true);
    assert_eq!(v["right_member"], true);
    assert_eq!(v["left"]["diagram"]["n"], 7);
}

#[test]
fn splice_outside_open_set_names_minor() {
    // With coefficients in [-2, 2] this seed lands on a vanishing minor.
    let out = skewpos(&["splice", "--diagram", "intro", "--seed", "9", "--bound", "2", "--column", "6"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("not in U_6") && err.contains("minor"), "{err}");
}

#[test]
fn splice_bad_column() {
    let out = skewpos(&["splice", "--diagram", "intro", "--column", "9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("column 9"));
}

#[test]
fn quiver_dot() {
    let out = skewpos(&["quiver", "--diagram", "running", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("digraph"));
    assert!(text.contains("->"));
}

#[test]
fn plabic_text_grid() {
    let out = skewpos(&["plabic", "--diagram", "running", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("4,5,8,11,12"));
    assert!(text.contains("μ region: 5,6,8,11,12"));
}

#[test]
fn mutate_at_box() {
    let out = skewpos(&["mutate", "--diagram", "running", "--box", "4,2", "--box", "4,2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let twice = json_of(&out);
    let other = json_of(&skewpos(&["mutate", "--diagram", "running", "--box", "3,1", "--box", "3,1"]));
    assert_eq!(twice["values"], other["values"]);
}

#[test]
fn mutate_frozen_is_input_error() {
    assert_eq!(skewpos(&["mutate", "--diagram", "running", "--box", "7,5"]).status.code(), Some(2));
}

#[test]
fn verify_passes() {
    let out = skewpos(&["verify", "--trials", "20", "--seed", "5"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn verify_targeted_splice() {
    let out = skewpos(&["verify", "--only", "splice", "--diagram", "intro", "--column", "6", "--trials", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["checked"]["splice"], 5);
}

#[test]
fn injected_fault_fails_with_reproducer() {
    let out = skewpos(&["verify", "--diagram", "running", "--inject-fault", "--trials", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json_of(&out);
    let f = &v["failures"][0];
    assert_eq!(f["diagram"]["n"], 12);
    assert!(f["seed"].is_u64());
    assert!(f.get("column").is_some());
}

#[test]
fn bad_config_rejected() {
    assert_eq!(skewpos(&["verify", "--trials", "0"]).status.code(), Some(2));
    assert_eq!(skewpos(&["sample", "--diagram", "running", "--bound", "1"]).status.code(), Some(2));
}
