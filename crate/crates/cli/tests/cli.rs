use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kschur"))
        .args(args)
        .env("KSCHUR_CACHE", cache)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn terms(doc: &Value) -> Vec<(Vec<u64>, Value)> {
    doc["expansion"]["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            let idx = t["index"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).collect();
            (idx, t["coeff"].clone())
        })
        .collect()
}

#[test]
fn expand_kschur_in_schur() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&dir.path().join("c.json"), &["expand", "kschur", "--k", "2", "--index", "1,1,1"]);
    assert!(out.status.success());
    let doc = json(&out);
    assert_eq!(doc["meta"]["version"], env!("CARGO_PKG_VERSION"));
    let t = terms(&doc);
    assert_eq!(t.len(), 2);
    assert_eq!(t[0], (vec![2, 1], serde_json::json!({"t^1": "1"})));
    assert_eq!(t[1], (vec![1, 1, 1], serde_json::json!({"t^0": "1"})));
}

#[test]
fn expand_macdonald_in_kschur() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        &dir.path().join("c.json"),
        &["expand", "macdonald-h", "--index", "2,1", "--target", "kschur", "--k", "2", "--format", "text"],
    );
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "(1)sk[2,1] + (q)sk[1,1,1]");
}

#[test]
fn expand_empty_hall_littlewood() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&dir.path().join("c.json"), &["expand", "hall", "--index", ""]);
    assert!(out.status.success());
    assert_eq!(terms(&json(&out)), vec![(vec![], serde_json::json!({"t^0": "1"}))]);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let c = dir.path().join("c.json");
    assert_eq!(run(&c, &["expand", "kschur", "--k", "2", "--index", "3"]).status.code(), Some(2));
    assert_eq!(run(&c, &["expand", "kschur", "--k", "2", "--index", "a,b"]).status.code(), Some(3));
    assert_eq!(run(&c, &["expand", "kschur", "--index", "1"]).status.code(), Some(3));
    assert_eq!(run(&c, &["table", "nonsense", "--k", "2", "--degree", "3"]).status.code(), Some(3));
    assert_eq!(run(&c, &["verify", "--check", "missing"]).status.code(), Some(3));
    assert_eq!(run(&c, &["frobnicate"]).status.code(), Some(3));
    // s_3 is not in the span of 2-bounded k-Schur functions
    assert_eq!(
        run(&c, &["expand", "hall", "--index", "3", "--target", "kschur", "--k", "2"]).status.code(),
        Some(2)
    );
}

#[test]
fn table_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        &dir.path().join("c.json"),
        &["table", "mach-in-kschur", "--k", "2", "--degree", "3", "--format", "csv"],
    );
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "row,1 1 1,2 1");
    assert_eq!(lines[2], "2 1,q,1");
}

#[test]
fn verify_reports() {
    let dir = tempfile::tempdir().unwrap();
    let c = dir.path().join("c.json");
    let out = run(&c, &["verify", "--check", "irreducible-count", "--k", "4"]);
    assert!(out.status.success());
    let r = &json(&out)["reports"][0];
    assert_eq!(r["verdict"], "PASS");
    assert_eq!(r["cases"][0]["data"]["count"], 24);

    let out = run(&c, &["verify", "--check", "tables", "--k", "2", "--max-degree", "6", "--jobs", "2"]);
    assert!(out.status.success());
    let r = &json(&out)["reports"][0];
    assert_eq!(r["verdict"], "PASS");
    assert_eq!(r["case_count"], 7);

    let out = run(&c, &["verify", "--check", "morris-vs-vertex", "--k", "3", "--max-degree", "6"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["reports"][0]["verdict"], "PASS");
}

#[test]
fn output_is_deterministic_and_cache_neutral() {
    let dir = tempfile::tempdir().unwrap();
    let c = dir.path().join("c.json");
    let args = ["table", "mach-in-kschur", "--k", "3", "--degree", "4"];
    let cold = run(&c, &args);
    assert!(c.exists());
    let warm = run(&c, &args);
    let uncached = run(&c, &["--no-cache", "table", "mach-in-kschur", "--k", "3", "--degree", "4"]);
    assert_eq!(cold.stdout, warm.stdout);
    assert_eq!(cold.stdout, uncached.stdout);

    std::fs::write(&c, "{\"schema\": 1, \"entries\": []}").unwrap();
    let corrupt = run(&c, &args);
    assert!(corrupt.status.success());
    assert!(String::from_utf8_lossy(&corrupt.stderr).contains("ignoring cache"));
    assert_eq!(corrupt.stdout, cold.stdout);
}
