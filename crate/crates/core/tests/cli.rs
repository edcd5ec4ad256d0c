use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use wanas_core::catalog::{reseal, Catalog};

fn wanas(args: &[&str]) -> Output {
    wanas_env(args, None)
}

fn wanas_env(args: &[&str], catalog: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_wanas"));
    cmd.args(args).env_remove("WANAS_CATALOG");
    if let Some(p) = catalog {
        cmd.env("WANAS_CATALOG", p);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn g7_connection_table() {
    let o = wanas(&["tensors", "--group", "g7", "--tensor", "connection"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("nabla_e1 e1 = alpha*e2\n"), "{}", stdout(&o));
}

#[test]
fn g3_wan_is_expanded() {
    let o = wanas(&["tensors", "--group", "G3", "--tensor", "wan", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let wan = &v["tensors"]["wan"];
    // -γa3 + 2a1γ with a1 = (α-β-γ)/2, a3 = (α+β-γ)/2
    assert_eq!(wan[0][0], "1/2*alpha*gamma - 3/2*beta*gamma - 1/2*gamma^2");
    assert_eq!(wan[2][2], "1/2*alpha^2 - alpha*beta + 1/2*beta^2 - 1/2*gamma^2");
    assert_eq!(wan[0][1], "0");
    assert!(!stdout(&o).contains("a1"));
}

#[test]
fn torsion_at_a_point() {
    let o = wanas(&["tensors", "--group", "g1", "--tensor", "torsion", "--at", "alpha=1,beta=0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("T(e1, e3) = e1\n"), "{}", stdout(&o));
}

#[test]
fn levi_civita_connection_is_available() {
    let o = wanas(&["tensors", "--group", "g3", "--connection", "levi-civita", "--tensor", "torsion"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "T(e1, e2) = 0\nT(e1, e3) = 0\nT(e2, e3) = 0\n");
}

#[test]
fn check_examples() {
    let o = wanas(&["check", "--group", "g2", "--kind", "first", "--at", "alpha=0,beta=0,gamma=1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"]["outcome"], "soliton");
    assert_eq!(v["verdict"]["c"], "-2");
    assert_eq!(v["verdict"]["D"], serde_json::json!([["0", "0", "0"], ["0", "1", "0"], ["0", "0", "2"]]));

    let o = wanas(&["check", "--group", "g1", "--kind", "second", "--at", "alpha=1,beta=2", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"]["outcome"], "no_soliton");
    assert!(!v["verdict"]["witness"].as_array().unwrap().is_empty());

    let o = wanas(&["check", "--group", "g5", "--kind", "second", "--at", "alpha=1,beta=0,gamma=0,delta=1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("soliton with c = 2"), "{}", stdout(&o));

    let o = wanas(&["check", "--group", "g3", "--kind", "first", "--at", "alpha=0,beta=0,gamma=0", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"]["outcome"], "soliton_any_c");
    assert_eq!(v["verdict"]["D"][0][0], "-c");
}

#[test]
fn invalid_points_are_usage_errors() {
    let o = wanas(&["check", "--group", "g1", "--kind", "first", "--at", "alpha=0,beta=1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("alpha != 0 violated"), "{}", stderr(&o));

    let o = wanas(&["check", "--group", "g4", "--kind", "first", "--at", "alpha=0,beta=0,eta=2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("eta must be 1 or -1"), "{}", stderr(&o));

    let o = wanas(&["check", "--group", "g1", "--kind", "first", "--at", "alpha=0.5,beta=1"]);
    assert_eq!(o.status.code(), Some(2));

    let o = wanas(&["check", "--group", "g1", "--kind", "first", "--at", "alpha=1"]);
    assert_eq!(o.status.code(), Some(2));

    let o = wanas(&["tensors", "--group", "g2", "--at", "alpha=1,beta=1,gamma=1,delta=1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_flags_are_usage_errors() {
    assert_eq!(wanas(&["check", "--group", "g8", "--kind", "first", "--at", "alpha=1"]).status.code(), Some(2));
    assert_eq!(wanas(&["tensors", "--group", "g1", "--frobnicate"]).status.code(), Some(2));
    assert_eq!(wanas(&["tensors"]).status.code(), Some(2));
    assert_eq!(wanas(&["classify", "--group", "g1", "--grid-ladder", "0.5"]).status.code(), Some(2));
    assert_eq!(wanas(&["nonsense"]).status.code(), Some(2));
    assert_eq!(wanas(&["--help"]).status.code(), Some(0));
}

#[test]
fn spec_file_escape_hatch() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("heis.json");
    std::fs::write(
        &path,
        r#"{"brackets": {"12": ["0", "0", "alpha"], "13": ["0", "0", "0"], "23": ["0", "0", "0"]},
            "constraints": [{"nonzero": "alpha"}]}"#,
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let o = wanas(&["jacobi", "--spec-file", p]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("holds identically"));
    let o = wanas(&["check", "--spec-file", p, "--kind", "first", "--at", "alpha=1", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["verdict"]["outcome"].is_string());

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"brackets": {"12": ["0", "0", "1"], "13": ["1", "0", "0"], "23": ["0", "1", "0"]}}"#)
        .unwrap();
    let o = wanas(&["jacobi", "--spec-file", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));

    let o = wanas(&["jacobi", "--spec-file", p, "--group", "g1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn classify_reports_agreement() {
    let o = wanas(&["classify", "--group", "g2", "--kind", "first"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 disagree"), "{}", stdout(&o));

    let o = wanas(&["classify", "--group", "g1", "--grid-ladder", "1,2", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
    // {0, 1, 2} is too small, so the densifying values are added: α ≠ 0 leaves 9 × 10 points
    assert_eq!(v[0]["total"], 90);
}

#[test]
fn verify_paper_summary_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = wanas(&["verify-paper", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("7 groups, all displays matched, all theorem cases pass"), "{}", stdout(&o));

    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    for key in ["version", "groups", "classifications", "summary"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["groups"].as_array().unwrap().len(), 7);
    assert_eq!(v["classifications"].as_array().unwrap().len(), 14);
    assert_eq!(v["summary"]["all_pass"], true);
    assert_eq!(v["summary"]["mismatched"], 0);
}

#[test]
fn verify_paper_g4_has_both_eta_branches() {
    let o = wanas(&["verify-paper", "--group", "g4", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["groups"].as_array().unwrap().len(), 1);
    for c in v["classifications"].as_array().unwrap() {
        let b = &c["eta_branches"];
        assert!(b["eta=1"].as_u64().unwrap() > 0 && b["eta=-1"].as_u64().unwrap() > 0);
    }
}

#[test]
fn verify_paper_g3_checks_the_identity_remark() {
    let o = wanas(&["verify-paper", "--group", "g3", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let ids = &v["groups"][0]["identities"];
    assert_eq!(ids[0]["identity"], "wan_tilde = wan");
    assert_eq!(ids[0]["holds"], true);
}

#[test]
fn json_output_is_deterministic() {
    let args = ["tensors", "--group", "g6", "--json"];
    assert_eq!(wanas(&args).stdout, wanas(&args).stdout);
    let args = ["verify-paper", "--group", "g6", "--json"];
    assert_eq!(wanas(&args).stdout, wanas(&args).stdout);
}

#[test]
fn catalog_override_and_checksum() {
    let dir = tempfile::tempdir().unwrap();
    let mut doc: Value = serde_json::from_str(Catalog::embedded_text()).unwrap();

    let tampered = dir.path().join("tampered.json");
    doc["groups"][1]["claimed"]["ric"][2][1] = Value::String("beta*gamma".into());
    std::fs::write(&tampered, doc.to_string()).unwrap();
    let o = wanas_env(&["jacobi", "--group", "g1"], Some(&tampered));
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("checksum"), "{}", stderr(&o));

    let resealed = dir.path().join("resealed.json");
    reseal(&mut doc);
    std::fs::write(&resealed, doc.to_string()).unwrap();
    let o = wanas_env(&["verify-paper", "--group", "g2"], Some(&resealed));
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("MISMATCH"), "{}", stdout(&o));

    let missing = dir.path().join("nope.json");
    assert_eq!(wanas_env(&["jacobi", "--group", "g1"], Some(&missing)).status.code(), Some(2));
}
