use std::path::Path;
use std::process::{Command, Output};
use std::time::Instant;

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_burnside")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = run(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout));
    });
    (out.status.code().unwrap(), v)
}

fn so3_path() -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/data/lie/so3.json").display().to_string()
}

#[test]
fn marks() {
    let (code, v) = json(&["marks", "--group", "S3"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["results"]["marks"], serde_json::json!([[6, 0, 0, 0], [3, 1, 0, 0], [2, 0, 2, 0], [1, 1, 1, 1]]));
    let (code, v) = json(&["marks", "--group", "trivial"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["marks"], serde_json::json!([[1]]));
}

#[test]
fn malformed_group_file() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.grp");
    std::fs::write(&bad, "name: bad\n(0 1)(1 2)\n").unwrap();
    let (code, v) = json(&["marks", "--file", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(v["status"], "error");
    assert_eq!(v["error"]["error"], "MalformedCycle");

    let good = dir.path().join("s3.grp");
    std::fs::write(&good, "name: S3 again\n(0 1 2)\n(0 1)\n").unwrap();
    let (code, v) = json(&["artin", "--file", good.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["inputs"]["sha256"].as_str().unwrap().len(), 64);

    assert_eq!(run(&["marks", "--group", "M11"]).status.code(), Some(2));
    assert_eq!(run(&["artin", "--group", "S3", "--n", "two"]).status.code(), Some(2));
}

#[test]
fn artin() {
    let (code, v) = json(&["artin", "--group", "S3", "--n", "1"]);
    assert_eq!(code, 0);
    let coeffs: Vec<i64> =
        v["results"]["coefficients"].as_array().unwrap().iter().map(|c| c["c"].as_i64().unwrap()).collect();
    assert_eq!(coeffs, vec![-3, 6, 3]);
    assert_eq!(json(&["artin", "--group", "C2xC2", "--n", "1"]).0, 0);
    let (code, v) = json(&["artin", "--group", "S3", "--n", "0"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["order_n"], 6);
}

#[test]
fn brauer() {
    let (code, v) = json(&["brauer", "--group", "S3"]);
    assert_eq!(code, 0);
    let support: Vec<&str> =
        v["results"]["coefficients"].as_array().unwrap().iter().map(|c| c["class"].as_str().unwrap()).collect();
    assert_eq!(support.len(), 4);
    assert_eq!(json(&["brauer", "--group", "A4", "--n", "1"]).0, 0);
    let (code, v) = json(&["brauer", "--group", "trivial"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["i_n_ghost"], serde_json::json!([1]));
}

#[test]
fn equalizer() {
    let (code, v) = json(&["equalizer", "--group", "S3", "--n", "1", "--mode", "artin"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["psi_res"], serde_json::json!([[6, 0, 0], [0, 6, 0], [0, 0, 6]]));
    assert_eq!(v["results"]["res_psi"], serde_json::json!([[6, 0, 0], [0, 6, 0], [0, 0, 6]]));
    let (code, v) = json(&["equalizer", "--group", "S3", "--mode", "brauer"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["elementary_divisors"], serde_json::json!([1, 1, 1]));

    let empty = tempfile::tempdir().unwrap();
    let (code, v) = json(&["equalizer", "--group", "S3", "--tables", empty.path().to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["error"], "MissingTable");

    // n = 0 on a nontrivial group is a failed check, not bad input
    let (code, v) = json(&["equalizer", "--group", "S3", "--n", "0"]);
    assert_eq!(code, 1);
    assert_eq!(v["results"]["error"], "CompositeMismatch");
}

#[test]
fn lie() {
    let so3 = so3_path();
    let (code, v) = json(&["lie", "--file", &so3, "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["order_n"], 6);
    let (_, v) = json(&["lie", "--file", &so3, "--power", "2", "--n", "2"]);
    assert_eq!(v["results"]["order_n"], 12);
    let (_, v) = json(&["lie", "--n", "0"]);
    assert_eq!(v["results"]["order_n"], 2);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"classes\": 3}").unwrap();
    let (code, v) = json(&["lie", "--file", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["error"], "Schema");
}

#[test]
fn verify() {
    let start = Instant::now();
    let (code, v) = json(&["verify", "--group", "S4"]);
    assert!(start.elapsed().as_secs_f64() < 10.0);
    assert_eq!(code, 0);
    assert!(v["results"]["checks"].as_array().unwrap().iter().all(|c| c["result"] == "pass"));
    assert_eq!(json(&["verify", "--group", "Q8"]).0, 0);
    let text = run(&["verify", "--group", "S3"]);
    assert!(String::from_utf8_lossy(&text.stdout).contains("status: pass"));
}

#[test]
fn json_is_deterministic() {
    for args in [&["verify", "--group", "S3", "--json"][..], &["brauer", "--group", "S4", "--n", "inf", "--json"]] {
        assert_eq!(run(args).stdout, run(args).stdout);
    }
}
