use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxeterlab"))
        .args(args)
        .env_remove("COXETERLAB_TOL")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn extended_canonical_237() {
    let out = run(&["analyze", "--family", "extended-canonical", "--weights", "2,3,7"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["factors"], serde_json::json!({"42": 1}));
    assert_eq!(v["period"], 42);
    assert_eq!(v["cyclotomic"], true);
}

#[test]
fn dynkin_e6_markdown() {
    let out = run(&["analyze", "--family", "dynkin", "--type", "E6", "--format", "md"]);
    assert_eq!(out.status.code(), Some(0));
    let md = String::from_utf8(out.stdout).unwrap();
    assert!(md.contains("Phi3*Phi12"));
    assert!(md.contains("| period | 12 |"));
}

#[test]
fn quiver_measures_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let q = write(
        dir.path(),
        "q.json",
        r#"{"vertices":["a","b"],"arrows":[["a","b"],["a","b"],["a","b"]]}"#,
    );
    let out_path = dir.path().join("r.json");
    let out = run(&[
        "analyze",
        "--quiver",
        &q,
        "--ops",
        "measures",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&fs::read_to_string(out_path).unwrap()).unwrap();
    let rho = v["measures"]["spectral_radius"].as_f64().unwrap();
    assert!((rho - (7.0 + 45f64.sqrt()) / 2.0).abs() < 1e-10);
    assert_eq!(v["measures"]["certified"], false);
    assert!(v.get("period").is_none());
}

#[test]
fn malformed_file_reports_line_and_field() {
    let dir = tempfile::tempdir().unwrap();
    let q = write(
        dir.path(),
        "q.json",
        "{\n \"vertices\": [\"a\"],\n \"arrows\": [[\"a\", 7.5]]\n}",
    );
    let out = run(&["analyze", "--quiver", &q]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 3") && err.contains("arrows[0]"), "{err}");
}

#[test]
fn validation_errors_exit_two() {
    for args in [
        &["analyze", "--family", "dynkin", "--type", "E9"][..],
        &["analyze", "--family", "truncated", "--n", "3"][..],
        &["analyze", "--family", "nonsense"][..],
        &["analyze", "--family", "dynkin", "--type", "A3", "--ops", "volume"][..],
        &["analyze", "--family", "dynkin", "--type", "A3", "--tol", "-1"][..],
        &["analyze"][..],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn wrong_document_kind_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "p.json", r#"{"elements":["a"],"covers":[]}"#);
    assert_eq!(run(&["analyze", "--quiver", &p]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "--poset", &p]).status.code(), Some(0));
}

#[test]
fn tolerance_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_coxeterlab"))
        .args(["analyze", "--family", "star", "--weights", "2,3,7", "--ops", "measures"])
        .env("COXETERLAB_TOL", "1e-9")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["measures"]["tolerance"], 1e-9);
    assert!((v["measures"]["mahler"].as_f64().unwrap() - 1.176280).abs() < 1e-5);
    let bad = Command::new(env!("CARGO_BIN_EXE_coxeterlab"))
        .args(["analyze", "--family", "dynkin", "--type", "A2"])
        .env("COXETERLAB_TOL", "abc")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn composite_families() {
    let dir = tempfile::tempdir().unwrap();
    let a2 = write(dir.path(), "a2.json", r#"{"family":"truncated","n":2,"r":2}"#);
    let out = run(&[
        "analyze",
        "--family",
        "tensor",
        "--of",
        &a2,
        "--of",
        &a2,
        "--ops",
        "factorize",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["n"], 4);

    let out = run(&["analyze", "--family", "repetitive", "--of", &a2, "--ops", "factorize"]);
    assert_eq!(json(&out)["n"], 4);

    let crown = write(
        dir.path(),
        "crown.json",
        r#"{"vertices":["0","1","2","3"],"arrows":[[0,2],[0,3],[1,3],[1,2]]}"#,
    );
    let act = write(dir.path(), "act.json", r#"{"generators":[[1,0,3,2]]}"#);
    let out = run(&[
        "analyze",
        "--family",
        "quotient",
        "--of",
        &crown,
        "--action",
        &act,
        "--ops",
        "factorize",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["factors"], serde_json::json!({"1": 2}));

    let out = run(&["analyze", "--spec", &crown, "--action", &act, "--ops", "symmetry"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out)["symmetry"]["restricted"].is_array());
    assert_eq!(
        run(&["analyze", "--family", "quotient", "--of", &crown]).status.code(),
        Some(2)
    );
}

#[test]
fn tables_pass_modulo_listed_deviations() {
    for t in ["dynkin", "extended-dynkin", "weights"] {
        let out = run(&["table", t]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{t}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    let a = run(&["table", "weights", "--format", "json"]);
    let b = run(&["table", "weights", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["rows"].as_array().unwrap().len(), 38);
    assert_eq!(run(&["table", "nope"]).status.code(), Some(2));
}

#[test]
fn batch_empty_dir() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["batch", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["files"], 0);
    assert!(dir.path().join("reports/summary.json").exists());
}

#[test]
fn batch_with_one_bad_file() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "e8.json", r#"{"family":"dynkin","type":"E8"}"#);
    write(dir.path(), "w.json", r#"{"weights":[2,3,7],"construction":"star"}"#);
    write(
        dir.path(),
        "p.json",
        r#"{"elements":["a","b","c"],"covers":[[0,2],[1,2]]}"#,
    );
    write(dir.path(), "bad.json", r#"{"vertices":["a"],"arrows":[["a","a"]]}"#);
    write(dir.path(), "notes.txt", "ignored");
    let out = run(&["batch", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["files"], 4);
    assert_eq!(v["failed"], 1);
    assert_eq!(v["failures"][0]["file"], "bad.json");
    assert_eq!(v["cyclotomic"], 2);
    assert_eq!(v["non_cyclotomic"], 1);
    assert!(dir.path().join("reports/e8.report.json").exists());
}
