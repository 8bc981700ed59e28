use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn ltab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ltab")).args(args).output().expect("binary runs")
}

fn ltab_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ltab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Grid JSON from top-first rows of `r3`/`b0`/`##` tokens.
fn grid_json(family: &str, params: Value, sign: Option<&str>, top_first: &[&str]) -> String {
    let rows: Vec<Value> = top_first
        .iter()
        .rev()
        .map(|line| {
            line.split_whitespace()
                .map(|t| match (&t[..1], &t[1..]) {
                    ("r", v) => json!({"kind": "red", "value": v.parse::<u32>().unwrap()}),
                    ("b", v) => json!({"kind": "blue", "value": v.parse::<u32>().unwrap()}),
                    _ => json!({"kind": "gray"}),
                })
                .collect()
        })
        .collect();
    let mut v = json!({"family": family, "params": params, "grid": rows});
    if let Some(s) = sign {
        v["sign"] = json!(s);
    }
    v.to_string()
}

fn example_l_7_3_10() -> String {
    grid_json(
        "l",
        json!({"g": 7, "r": 3, "d": 10}),
        None,
        &["r2 r4 r5 r6 b0 b2 b3", "r1 r3 r4 r5 r7 b1 b2", "r1 r2 r3 r5 r6 r7 b1", "r1 r2 r3 r4 r6 r7 b0"],
    )
}

#[test]
fn count_l() {
    let o = ltab(&["count", "l", "--g", "4", "--r", "3", "--d", "9"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("count: 256"), "{s}");
    assert!(s.contains("prediction: 256"));
    assert!(s.contains("pass matches (r+1)^g"));
}

#[test]
fn count_castelnuovo() {
    let o = ltab(&["count", "castelnuovo", "--g", "10", "--r", "4", "--format", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["counts"]["count"], "42");
}

#[test]
fn count_lprime() {
    let o = ltab(&["count", "lprime", "--g", "3", "--d", "7", "--k", "4", "--format", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["counts"]["count"], "8");
    assert_eq!(v["counts"]["prediction"], "8");
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    assert!(v.get("elapsed_ms").is_none());
}

#[test]
fn timing_adds_elapsed() {
    let o = ltab(&["count", "restricted", "--g", "3", "--r", "2", "--i", "1", "--format", "json", "--timing"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["counts"]["count"], "8");
    assert!(v["elapsed_ms"].is_u64());
}

#[test]
fn count_integrals() {
    let o = ltab(&["count", "integral-l", "--g", "3", "--r", "2", "--d", "5"]);
    assert!(stdout(&o).contains("count: 27"));
    let o = ltab(&["count", "integral-lprime", "--g", "3", "--d", "7", "--k", "4"]);
    assert!(stdout(&o).contains("count: 8"));
}

#[test]
fn missing_param_is_usage_error() {
    let o = ltab(&["count", "l", "--g", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--r is required"));
    assert_eq!(ltab(&["count", "nonsense"]).status.code(), Some(2));
    assert_eq!(ltab(&["enumerate", "l", "--g", "1", "--r", "1", "--d", "2", "--format", "pdf"]).status.code(), Some(2));
}

#[test]
fn enumerate_l_ascii() {
    let o = ltab(&["enumerate", "l", "--g", "2", "--r", "1", "--d", "3", "--format", "ascii"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert_eq!(s.split("\n\n").count(), 4);
    assert!(s.starts_with("b0 b0\nr1 r2\n"));
}

#[test]
fn enumerate_lprime_json_lines() {
    let o =
        ltab(&["enumerate", "lprime", "--g", "0", "--d", "2", "--k", "2", "--sign", "positive", "--format", "json"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    for line in lines {
        let v: Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["family"], "lprime");
        assert_eq!(v["sign"], "positive");
    }
    let o =
        ltab(&["enumerate", "lprime", "--g", "0", "--d", "2", "--k", "2", "--sign", "negative", "--format", "json"]);
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn enumerate_limit() {
    let o = ltab(&["enumerate", "l", "--g", "3", "--r", "2", "--d", "5", "--format", "json", "--limit", "1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn enumerate_latex() {
    let o = ltab(&["enumerate", "l", "--g", "1", "--r", "1", "--d", "2", "--format", "latex"]);
    let s = stdout(&o);
    assert_eq!(s.matches("\\begin{ytableau}").count(), 2);
    assert!(s.contains("*(white!80!red) \\color{black} 1"));
    assert!(s.contains("\\color{blue} 0"));
}

#[test]
fn enumerate_lprime_needs_sign() {
    let o = ltab(&["enumerate", "lprime", "--g", "1", "--d", "3", "--k", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn map_rsk_word() {
    let o = ltab(&["map", "rsk", "--word", "0,2,1,1,0,3,0,0,1", "--r", "3", "--format", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["p"]["rows"], json!([[0, 0, 0, 0, 1], [1, 1, 3], [2]]));
    assert_eq!(v["q"]["rows"], json!([[1, 2, 4, 6, 9], [3, 7, 8], [5]]));
    assert_eq!(v["p"]["shape"], json!([5, 3, 1]));

    let pair = stdout(&o);
    let back = ltab(&["map", "rsk-inverse", pair.trim(), "--r", "3", "--format", "json"]);
    let w: Value = serde_json::from_str(&stdout(&back)).unwrap();
    assert_eq!(w, json!({"r": 3, "letters": [0, 2, 1, 1, 0, 3, 0, 0, 1]}));
}

#[test]
fn map_l_to_word_example() {
    let o = ltab(&["map", "l-to-word", &example_l_7_3_10()]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o), "3,2,2,1,0,1,3\n");

    let o = ltab(&["map", "word-to-l", "--word", "3,2,2,1,0,1,3", "--r", "3", "--format", "json"]);
    let got: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let want: Value = serde_json::from_str(&example_l_7_3_10()).unwrap();
    assert_eq!(got["grid"], want["grid"]);
}

#[test]
fn map_phi_example() {
    let red = json!({
        "shape": [6, 6, 5, 4],
        "rows": [[1, 2, 3, 4, 6, 7], [1, 2, 3, 5, 6, 7], [1, 3, 4, 5, 7], [2, 4, 5, 6]],
        "orientation": "standard"
    });
    let o = ltab(&["map", "phi", &red.to_string(), "--r", "3", "--format", "json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        v,
        json!({"shape": [3, 2, 1, 1], "rows": [[1, 3, 7], [2, 6], [4], [5]], "orientation": "rotated180", "box": [4, 7]})
    );
}

#[test]
fn map_phi_i_and_stdin() {
    let red = json!({"shape": [4, 3, 3, 3, 2], "rows": [[1, 2, 3, 4], [1, 3, 4], [1, 3, 5], [2, 4, 5], [2, 5]], "orientation": "standard"});
    let o = ltab_stdin(&["map", "phi-i", "-", "--r", "4", "--format", "json"], &red.to_string());
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["rows"], json!([[1, 3, 4], [1, 3], [2, 4], [2, 5], [5]]));
}

#[test]
fn map_validation_error_names_invariant_and_cell() {
    let bad = grid_json(
        "l",
        json!({"g": 7, "r": 3, "d": 10}),
        None,
        &["r2 r4 r5 r6 b0 b2 b3", "r1 r3 r4 r5 r7 b1 b2", "r1 r2 r3 r5 r6 r7 b1", "r1 r2 r3 r5 r6 r7 b0"],
    );
    let o = ltab(&["map", "l-to-word", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("violated"), "{}", stderr(&o));

    let bad = grid_json("l", json!({"g": 1, "r": 1, "d": 3}), None, &["b0 b1", "r1 b1"]);
    let o = ltab(&["map", "l-to-word", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("at (row 1, col 2)"), "{}", stderr(&o));
}

#[test]
fn map_psi_and_binary() {
    let negative =
        grid_json("lprime", json!({"g": 3, "d": 7, "k": 4}), Some("negative"), &["r3 b0 b1 ## ##", "r1 r2 b0 b0 b1"]);
    let o = ltab(&["map", "psi", &negative, "--format", "json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["sign"], "positive");
    assert_eq!(v["grid"].as_array().unwrap()[0].as_array().unwrap().len(), 6);

    let positive = grid_json(
        "lprime",
        json!({"g": 3, "d": 7, "k": 4}),
        Some("positive"),
        &["r3 b0 b1 ## ## ##", "r1 r2 b0 b0 b0 b0"],
    );
    let o = ltab(&["map", "lprime-to-binary", &positive]);
    assert!(o.status.success(), "{}", stderr(&o));
    let word = stdout(&o).trim().to_string();
    let back = ltab(&["map", "binary-to-lprime", "--word", &word, "--d", "7", "--k", "4", "--format", "json"]);
    let got: Value = serde_json::from_str(&stdout(&back)).unwrap();
    let want: Value = serde_json::from_str(&positive).unwrap();
    assert_eq!(got["grid"], want["grid"]);
}

#[test]
fn map_truncate() {
    let o = ltab(&["map", "truncate", &example_l_7_3_10(), "--format", "json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["params"]["d"], 10);
}

#[test]
fn map_without_input_is_usage_error() {
    assert_eq!(ltab(&["map", "phi", "--r", "2"]).status.code(), Some(2));
    assert_eq!(ltab(&["map", "phi", "/nonexistent/file.json", "--r", "2"]).status.code(), Some(2));
}

#[test]
fn verify_all_passes() {
    let o = ltab(&["verify", "all", "--g-max", "3", "--r-max", "2", "--d-slack", "2", "--k-max", "4"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn verify_trivial_box() {
    let o = ltab(&["verify", "counts", "--g-max", "0", "--format", "json"]);
    assert!(o.status.success());
}

#[test]
fn verify_injected_fault_fails_with_counterexample() {
    let o = ltab(&["verify", "bijections", "--inject-fault", "corrupt-word", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let failed: Vec<&Value> = v["checks"].as_array().unwrap().iter().filter(|c| c["passed"] == false).collect();
    assert!(!failed.is_empty());
    assert_eq!(failed[0]["counterexample"]["family"], "l");

    let o = ltab(&["verify", "counts", "--inject-fault", "drop-tableau"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.txt");
    let o = ltab(&["count", "castelnuovo", "--g", "6", "--r", "2", "--output", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().contains("count: 5"));
}

#[test]
fn output_is_deterministic() {
    let args = ["enumerate", "l", "--g", "3", "--r", "2", "--d", "6", "--format", "json"];
    let a = ltab(&args);
    let b = ltab(&[&args[..], &["--threads", "1"]].concat());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 27);
}
