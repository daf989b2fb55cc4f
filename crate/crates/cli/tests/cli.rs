use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn shuffly(args: &[&str]) -> Output {
    shuffly_env(args, &[])
}

fn shuffly_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_shuffly"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("bad JSON ({e}): {}\nstderr: {}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    })
}

/// Runs `psi` and stores the element in `dir/name.json`.
fn psi_file(dir: &Path, name: &str, args: &[&str]) -> PathBuf {
    let path = dir.join(format!("{name}.json"));
    let mut full = vec!["psi"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", path.to_str().unwrap()]);
    let out = shuffly(&full);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn verify_rational_passes() {
    let out = shuffly(&["verify", "--case", "rational", "--parities", "01", "--max-mode", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["summary"]["failures"], 0);
    assert!(doc["summary"]["checks"].as_u64().unwrap() > 0);
    assert!(doc.get("timing_ms").is_none());
}

#[test]
fn verify_trig_passes() {
    let out = shuffly(&["verify", "--case", "trig", "--parities", "0011", "--max-mode", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["summary"]["failures"], 0);
    let names: Vec<&str> = doc["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"quartic_forms_agree"));
}

#[test]
fn timing_is_opt_in() {
    let out = shuffly(&["verify", "--case", "rational", "--parities", "00", "--max-mode", "1", "--timing"]);
    assert!(json(&out).get("timing_ms").is_some());
}

#[test]
fn bad_parities_are_usage_errors() {
    let out = shuffly(&["verify", "--case", "rational", "--parities", "2x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn shuffle_matches_naive_and_unit() {
    let dir = TempDir::new().unwrap();
    let a = psi_file(dir.path(), "a", &["--parities", "010", "--word", "1:0,2:1"]);
    let b = psi_file(dir.path(), "b", &["--parities", "010", "--word", "2:0"]);
    let fast = shuffly(&["shuffle", s(&a), s(&b)]);
    let naive = shuffly(&["shuffle", s(&a), s(&b), "--naive"]);
    assert_eq!(fast.status.code(), Some(0));
    assert_eq!(fast.stdout, naive.stdout);
    // the product is the image of the concatenated word
    let word = shuffly(&["psi", "--parities", "010", "--word", "1:0,2:1,2:0"]);
    assert_eq!(json(&fast), json(&word));
}

#[test]
fn trig_elements_round_trip() {
    let dir = TempDir::new().unwrap();
    let a = psi_file(dir.path(), "a", &["--parities", "00", "--case", "trig", "--word", "1:-1"]);
    let b = psi_file(dir.path(), "b", &["--parities", "00", "--case", "trig", "--word", "1:1"]);
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&a).unwrap()).unwrap();
    assert_eq!(doc["case"], "trig");
    let fast = shuffly(&["shuffle", s(&a), s(&b)]);
    let naive = shuffly(&["shuffle", s(&a), s(&b), "--naive"]);
    assert_eq!(fast.status.code(), Some(0));
    assert_eq!(fast.stdout, naive.stdout);
}

#[test]
fn decompose_round_trip() {
    let dir = TempDir::new().unwrap();
    let f = psi_file(dir.path(), "f", &["--parities", "000", "--pbw", r#"[["a1..2",1],["a1..1",0]]"#, "--scale", "2 + h"]);
    let out = shuffly(&["decompose", s(&f)]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc = json(&out);
    let coeffs = doc["coefficients"].as_array().unwrap();
    assert_eq!(coeffs.len(), 1);
    assert_eq!(coeffs[0]["coeff"], "h + 2");
    assert_eq!(doc["residual"], "0");
}

#[test]
fn goodness_and_integrality() {
    let dir = TempDir::new().unwrap();
    let f = psi_file(dir.path(), "f", &["--parities", "01", "--word", "1:2,1:0"]);
    let out = shuffly(&["isgood", s(&f)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["good"], true);

    let g = psi_file(dir.path(), "g", &["--parities", "000", "--pbw", r#"[["a1..2",0]]"#]);
    let out = shuffly(&["isintegral", s(&g)]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["integral"], false);
    let g = psi_file(dir.path(), "g2", &["--parities", "000", "--pbw", r#"[["a1..2",0]]"#, "--scale", "h"]);
    let out = shuffly(&["isintegral", s(&g)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["integral"], true);
}

#[test]
fn non_good_elements_are_rejected() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"parities": "000", "degree": [1, 1], "numerator": [{"coeff": "1", "exps": {}}]}"#).unwrap();
    let out = shuffly(&["isgood", s(&path)]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["witness"], "{a1..2:1}");
    let out = shuffly(&["decompose", s(&path)]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn schema_violations_are_usage_errors() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"parities": "000", "degree": [1, 1], "numerator": [], "extra": 1}"#).unwrap();
    assert_eq!(shuffly(&["isgood", s(&path)]).status.code(), Some(2));
    std::fs::write(&path, r#"{"parities": "000", "degree": [1], "numerator": []}"#).unwrap();
    assert_eq!(shuffly(&["isgood", s(&path)]).status.code(), Some(2));
    // not supersymmetric
    std::fs::write(&path, r#"{"parities": "000", "degree": [2, 0], "numerator": [{"coeff": "1", "exps": {"x1_1": 1}}]}"#).unwrap();
    assert_eq!(shuffly(&["isgood", s(&path)]).status.code(), Some(2));
}

#[test]
fn specialize_reports_polynomial() {
    let dir = TempDir::new().unwrap();
    let f = psi_file(dir.path(), "f", &["--parities", "000", "--word", "2:0,1:0"]);
    let out = shuffly(&["specialize", s(&f), "--d", "a1..2:1"]);
    assert_eq!(out.status.code(), Some(0));
    let poly = &json(&out)["poly"];
    assert_eq!(poly[0]["coeff"], "1");
    assert_eq!(poly[0]["exps"]["h"], 1);
    let out = shuffly(&["specialize", s(&f), "--d", "a1..3:1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn independence_reports_full_rank() {
    for p in ["00", "01"] {
        let out = shuffly(&["independence", "--parities", p, "--max-len", "2", "--max-mode", "3"]);
        assert_eq!(out.status.code(), Some(0));
        let doc = json(&out);
        assert_eq!(doc["full_rank"], true);
        assert_eq!(doc["vanishing_matches_parity"], true);
    }
}

#[test]
fn reports_are_reproducible() {
    let args = ["verify", "--case", "rational", "--parities", "011", "--max-mode", "1"];
    let one = shuffly_env(&args, &[("SHUFFLY_THREADS", "1")]);
    let four = shuffly_env(&args, &[("SHUFFLY_THREADS", "4")]);
    let again = shuffly(&args);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.stdout, again.stdout);
    let bad = shuffly_env(&args, &[("SHUFFLY_THREADS", "0")]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn out_flag_writes_file() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("report.json");
    let out = shuffly(&["verify", "--case", "trig", "--parities", "00", "--max-mode", "1", "--out", s(&path)]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["command"]["case"], "trig");
}
