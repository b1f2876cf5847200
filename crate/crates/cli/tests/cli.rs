use std::path::Path;
use std::process::Command;

use schubert_cli::run;
use schubert_core::ClassJson;
use serde_json::Value;

fn schubert(args: &[&str]) -> (i32, Value) {
    let argv = std::iter::once("schubert").chain(args.iter().copied());
    let out = run(argv);
    let value = serde_json::from_str(&out.stdout).expect("stdout is JSON");
    (out.code, value)
}

fn fixtures_dir() -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .display()
        .to_string()
}

#[test]
fn mult_emits_canonical_terms() {
    let out = run(["schubert", "mult", "--box", "d=1,n=3", "1", "1"]);
    assert_eq!(out.code, 0);
    assert_eq!(
        out.stdout,
        r#"{"box":{"d":1,"n":3},"terms":[{"partition":[2,0],"coeff":1},{"partition":[1,1],"coeff":1}]}"#
    );
}

#[test]
fn mult_output_parses_back_as_a_class() {
    let (code, v) = schubert(&["mult", "--box", "d=2,n=5", "2,1", "1,1", "1"]);
    assert_eq!(code, 0);
    let class: ClassJson = serde_json::from_value(v).unwrap();
    let class = class.to_class().unwrap();
    assert!(class.is_pure_of(6));
    assert!(!class.is_zero());
}

#[test]
fn mult_on_a_product_space() {
    let (code, v) = schubert(&["mult", "--space", "2,3", "1,0", "1,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["terms"][0]["m"], serde_json::json!([2, 1]));
    let (_, v) = schubert(&["mult", "--space", "1,1", "1,0", "1,0"]);
    assert_eq!(v["terms"], serde_json::json!([]));
}

#[test]
fn conj_and_complement() {
    let (code, v) = schubert(&["conj", "--box", "d=3,n=8", "4,3,2,2"]);
    assert_eq!(code, 0);
    assert_eq!(v, serde_json::json!([4, 4, 2, 1]));
    let (_, v) = schubert(&["complement", "--box", "d=3,n=8", "4,3,2,2"]);
    assert_eq!(v, serde_json::json!([3, 3, 2, 1]));
}

#[test]
fn pieri_dual_and_oracle_agree_with_mult() {
    let (_, pieri) = schubert(&["pieri", "--box", "d=1,n=4", "2,1", "1"]);
    let (_, mult) = schubert(&["mult", "--box", "d=1,n=4", "2,1", "1"]);
    let (_, oracle) = schubert(&["lr-oracle", "--box", "d=1,n=4", "2,1", "1"]);
    assert_eq!(pieri, mult);
    assert_eq!(oracle, mult);
    let (code, dual) = schubert(&["dual", "--box", "d=1,n=4", "2,1"]);
    assert_eq!(code, 0);
    assert_eq!(dual["box"], serde_json::json!({"d": 2, "n": 4}));
    assert_eq!(dual["terms"][0]["partition"], serde_json::json!([2, 1, 0]));
}

#[test]
fn mu_j_and_delta() {
    let (_, v) = schubert(&["mu-j", "--box", "d=3,n=9", "5,2,2,1"]);
    let parts: Vec<Value> = v["descents"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d["partition"].clone())
        .collect();
    assert_eq!(
        parts,
        vec![
            serde_json::json!([6, 2, 2, 1]),
            serde_json::json!([3, 3, 3, 1]),
            serde_json::json!([2, 2, 2, 2])
        ]
    );
    let (_, v) = schubert(&["mu-j", "--box", "d=3,n=8", "5,2,2,1", "--j", "0"]);
    assert_eq!(v, serde_json::json!([5, 5, 2, 1]));
    let (_, v) = schubert(&["delta", "--box", "d=3,n=9", "6"]);
    assert_eq!(v["delta"], 5);
}

#[test]
fn nonzero_forms() {
    let (_, v) = schubert(&["nonzero", "--box", "d=1,n=3", "1", "1"]);
    assert_eq!(v["nonzero"], true);
    let (_, v) = schubert(&["nonzero", "--box", "d=1,n=3", "2", "1"]);
    assert_eq!(v["nonzero"], true);
    let (_, v) = schubert(&["nonzero", "--box", "d=1,n=3", "2,1", "2"]);
    assert_eq!(v["nonzero"], false);
    // σ_λ̄ with λ = (2,2) is the unit; σ_2·σ_2·σ_1 overflows the box
    let (_, v) = schubert(&["nonzero", "--box", "d=1,n=3", "--ell", "2,2", "2,2"]);
    assert_eq!(v["nonzero"], true);
    let (_, v) = schubert(&["nonzero", "--box", "d=1,n=3", "--ell", "2,2,1", "2,2"]);
    assert_eq!(v["nonzero"], false);
}

#[test]
fn omega_has_diagonal_support() {
    let (code, v) = schubert(&["omega", "--box", "d=0,n=2"]);
    assert_eq!(code, 0);
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
}

#[test]
fn check_returns_zero_on_false_verdicts() {
    let path = format!("{}/ex51.json", fixtures_dir());
    let (code, v) = schubert(&["check", "--criterion", "cor7.3", "--inputs", &path]);
    assert_eq!(code, 0);
    assert_eq!(v["holds"], false);
    let (code, v) = schubert(&["check", "--criterion", "hansen", "--inputs", &path]);
    assert_eq!(code, 0);
    assert_eq!(v["holds"], false);
    assert_eq!(v["witnesses"][1]["value"], 5);
}

#[test]
fn check_accepts_a_request_file_and_writes_out() {
    let dir = tempfile::tempdir().unwrap();
    let req = dir.path().join("req.json");
    std::fs::write(
        &req,
        r#"{"criterion":"th8.1","inputs":{"f":{"box":{"d":1,"n":3},"terms":[{"partition":[0,0],"coeff":1}]},"mu":[1,0]}}"#,
    )
    .unwrap();
    let out = dir.path().join("cert.json");
    let (code, v) = schubert(&[
        "check",
        "--inputs",
        req.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["holds"], true);
    let written: Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(written, v);
}

#[test]
fn validation_errors_exit_two_with_an_error_object() {
    for args in [
        vec!["mult", "--box", "d=1,n=3", "3", "1"],
        vec!["mult", "--box", "d=4,n=3", "1", "1"],
        vec!["conj", "--box", "d=1,n=3", "1,x"],
        vec!["mult", "1", "1"],
        vec!["mu-j", "--box", "d=3,n=9", "5,2,2,1", "--j", "1"],
        vec!["check", "--criterion", "th9.9", "--inputs", "missing.json"],
        vec!["nonzero", "--box", "d=1,n=3", "--ell", "1,2", "1"],
        vec!["frobnicate"],
    ] {
        let (code, v) = schubert(&args);
        assert_eq!(code, 2, "{args:?}");
        assert!(v["error"]["kind"].is_string(), "{args:?}");
        assert!(v["error"]["message"].is_string(), "{args:?}");
    }
}

#[test]
fn malformed_check_inputs_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"x": {"box": {"d": 1, "n": 3}, "terms": [], "extra": 1}}"#).unwrap();
    let (code, v) = schubert(&["check", "--criterion", "cor7.4", "--inputs", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "check");
}

#[test]
fn fixture_replay_passes_and_detects_mismatches() {
    let (code, v) = schubert(&["fixtures", "--dir", &fixtures_dir()]);
    assert_eq!(code, 0);
    assert_eq!(v["failed"], 0);

    let dir = tempfile::tempdir().unwrap();
    let src = std::fs::read_to_string(format!("{}/delta-row.json", fixtures_dir())).unwrap();
    let tampered = src.replace("\"expect\": 5", "\"expect\": 4");
    assert_ne!(src, tampered);
    std::fs::write(dir.path().join("delta-row.json"), tampered).unwrap();
    let (code, v) = schubert(&["fixtures", "--dir", dir.path().to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(v["failed"], 1);
}

#[test]
fn binary_prints_one_json_line() {
    let out = Command::new(env!("CARGO_BIN_EXE_schubert"))
        .args(["mult", "--box", "d=1,n=3", "1", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 1);
    let bad = Command::new(env!("CARGO_BIN_EXE_schubert"))
        .args(["conj", "--box", "d=1,n=3", "9"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
