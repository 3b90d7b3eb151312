use std::fs;
use std::path::PathBuf;
use std::process::Command;

use serde_json::{json, Value};

const Z4_LAMBDA_3: &str = r#"{"kind":"ModularInt","m":4,"involution":"trivial","lambda":"3"}"#;

fn formk1(args: &[&str]) -> (i32, String) {
    formk1_env(args, None)
}

fn formk1_env(args: &[&str], seed_env: Option<&str>) -> (i32, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_formk1"));
    cmd.args(args).env_remove("FORMK1_SEED");
    if let Some(s) = seed_env {
        cmd.env("FORMK1_SEED", s);
    }
    let out = cmd.output().expect("binary runs");
    let stdout = String::from_utf8(out.stdout).expect("utf-8 output");
    (out.status.code().expect("exit code"), stdout)
}

fn json_of(args: &[&str]) -> (i32, Value) {
    let (code, out) = formk1(args);
    let v = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{args:?} printed non-JSON {out:?}: {e}"));
    (code, v)
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn error_kind(v: &Value) -> &str {
    v["error"]["kind"].as_str().unwrap_or_else(|| panic!("no error object in {v}"))
}

#[test]
fn gq_member_reads_a_matrix_file() {
    let path = scratch("member.json");
    fs::write(&path, r#"{"n":2,"entries":[["1","2"],["0","1"]]}"#).unwrap();
    let (code, v) = json_of(&["gq", "member", "--ring", Z4_LAMBDA_3, "--matrix", path.to_str().unwrap()]);
    assert_eq!((code, v), (0, json!({"member": true})));
}

#[test]
fn non_member_exits_one() {
    let (code, v) = json_of(&["gq", "member", "--ring", Z4_LAMBDA_3, "--matrix", r#"{"n":2,"entries":[["1","0"],["0","3"]]}"#]);
    assert_eq!((code, v), (1, json!({"member": false})));
}

#[test]
fn trunc_decomp_example() {
    let (code, v) = json_of(&["trunc", "decomp", "--ring", "Z", "--t", "3", "--p", "1+X+X^2"]);
    assert_eq!((code, v), (0, json!({"a": ["1", "1", "0"]})));
}

#[test]
fn trunc_split_reconstructs() {
    let (code, v) = json_of(&["trunc", "split", "--ring", "Z/9", "--t", "4", "--p", "2+X-X^3", "--r", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["c"], "2");
    assert_eq!(v["reconstructs"], true);
}

#[test]
fn torsion_descent_refuses_a_non_unit_k() {
    let (code, v) = json_of(&["trunc", "descent", "--ring", "Z/4", "--t", "2", "--u", "1+2X", "--k", "2", "--r", "1"]);
    assert_eq!(code, 1);
    assert_eq!(error_kind(&v), "KNotInvertible");
}

#[test]
fn verify_paper_passes_and_is_deterministic() {
    let (code, first) = formk1(&["verify-paper", "--seed", "42"]);
    assert_eq!(code, 0, "{first}");
    let v: Value = serde_json::from_str(&first).unwrap();
    let entries = v["entries"].as_array().unwrap();
    assert!(entries.len() >= 10);
    for e in entries {
        assert_eq!(e["status"], "pass", "{e}");
    }
    assert_eq!(v["seed"], 42);
    let (_, second) = formk1(&["verify-paper", "--seed", "42"]);
    assert_eq!(first, second);
}

#[test]
fn seed_comes_from_the_environment_when_not_given() {
    let args = ["ring", "check", "--ring", "Z", "--samples", "5"];
    let (_, from_env) = formk1_env(&args, Some("7"));
    let (_, from_flag) = formk1(&["ring", "check", "--ring", "Z", "--samples", "5", "--seed", "7"]);
    assert_eq!(from_env, from_flag);
    let (_, default) = formk1(&args);
    assert_eq!(serde_json::from_str::<Value>(&default).unwrap()["seed"], 42);
    let (code, bad) = formk1_env(&args, Some("seven"));
    assert_eq!(code, 2);
    assert_eq!(error_kind(&serde_json::from_str(&bad).unwrap()), "UsageError");
}

#[test]
fn malformed_input_exits_two_with_a_json_error() {
    let cases: &[&[&str]] = &[
        &["gq", "member", "--ring", "Z/4", "--matrix", r#"{"n":2,"entries":[["1","x"],["0","1"]]}"#],
        &["gq", "member", "--ring", "Z/4", "--matrix", "{not json"],
        &["gq", "member", "--ring", "Z/4", "--matrix", "/nonexistent/m.json"],
        &["gq", "member", "--ring", "Z/4", "--matrix", r#"{"n":3,"entries":[["1","0"],["0","1"]]}"#],
        &["gq", "member", "--ring", r#"{"kind":"Quaternions"}"#, "--matrix", "[[1]]"],
        &["gq", "member", "--ring", "Z/4", "--matrix", r#"[["1","0","0"],["0","1","0"],["0","0","1"]]"#],
        &["gq", "gen", "--ring", "Z/4", "--family", "QX", "--i", "1", "--j", "2", "--a", "1"],
        &["gq", "gen", "--ring", "Z/4", "--family", "QE", "--i", "1", "--j", "1", "--a", "1"],
        &["excision", "roundtrip", "--ring", "Z/8", "--ideal", "2", "--element", "(5,3)"],
        &["graded", "eval", "--ring", r#"{"kind":"Graded","base":{"kind":"ModularInt","m":4},"top_degree":2}"#, "--b", "1", "--x", "Y"],
        &["frobnicate"],
        &["gq", "member", "--ring", "Z/4"],
    ];
    for args in cases {
        let (code, out) = formk1(args);
        assert_eq!(code, 2, "{args:?}: {out}");
        let v: Value = serde_json::from_str(&out).unwrap_or_else(|_| panic!("{args:?}: bare output {out:?}"));
        assert!(v["error"]["message"].is_string(), "{args:?}: {v}");
    }
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(formk1(&["--help"]).0, 0);
    let (code, out) = formk1(&["--version"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("formk1 "));
}

#[test]
fn generator_then_membership() {
    let (code, g) = json_of(&["gq", "gen", "--ring", "(Z/5)[i]", "--lambda", "i", "--family", "QR", "--i", "1", "--j", "2", "--a", "2+3i"]);
    assert_eq!(code, 0);
    let m = g["matrix"].to_string();
    assert_eq!(g["matrix"]["n"], 4);
    let (code, v) = json_of(&["gq", "member", "--ring", "(Z/5)[i]", "--lambda", "i", "--matrix", &m]);
    assert_eq!((code, v), (0, json!({"member": true})));
    let (code, v) = json_of(&["gq", "conditions", "--ring", "(Z/5)[i]", "--lambda", "i", "--form", "min", "--matrix", &m]);
    assert_eq!((code, v["quadratic"].clone()), (0, json!(true)));
}

#[test]
fn word_eval_matches_a_single_generator() {
    let (_, g) = json_of(&["gq", "gen", "--ring", Z4_LAMBDA_3, "--family", "QE", "--i", "1", "--j", "2", "--a", "3"]);
    let word = r#"{"factors":[{"family":"QE","i":1,"j":2,"a":"3"}]}"#;
    let (code, w) = json_of(&["word", "eval", "--ring", Z4_LAMBDA_3, "--word", word]);
    assert_eq!(code, 0);
    assert_eq!(w["matrix"], g["matrix"]);
}

#[test]
fn lifted_word_is_in_gq_of_the_excision_ring() {
    let word = r#"{"factors":[
        {"family":"QE","i":1,"j":2,"a":"2","conjugator":{"factors":[{"family":"QL","i":2,"j":1,"a":"1"}]}},
        {"family":"QR","i":2,"j":2,"a":"4","conjugator":{"factors":[{"family":"QE","i":2,"j":1,"a":"3"}]}}
    ]}"#;
    let (code, v) = json_of(&["word", "lift", "--ring", "Z/8", "--ideal", "2", "--word", word]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["agrees"], true);
    let ring = v["ring"].to_string();
    let (code, m) = json_of(&["gq", "member", "--ring", &ring, "--matrix", &v["matrix"].to_string()]);
    assert_eq!((code, m), (0, json!({"member": true})));
    let (code, w) = json_of(&["word", "eval", "--ring", &ring, "--form", r#"{"mode":"extended"}"#, "--word", &v["word"].to_string()]);
    assert_eq!(code, 0, "{w}");
    assert_eq!(w["matrix"], v["matrix"]);
}

#[test]
fn excision_roundtrip_both_directions() {
    let (code, v) = json_of(&["excision", "roundtrip", "--ring", "Z/8", "--ideal", "2", "--element", "(1|3)"]);
    assert_eq!(code, 0);
    assert_eq!(v["excision"], "(1,2)");
    let (code, v) = json_of(&["excision", "roundtrip", "--ring", "Z/8", "--ideal", "2", "--element", "(5,6)"]);
    assert_eq!(code, 0);
    assert_eq!(v["double"], "(5|3)");
    assert_eq!(v["back"], "(5,6)");
}

#[test]
fn reductions_reconstruct() {
    let upper = r#"{"n":2,"entries":[["1","2"],["0","1"]]}"#;
    let (code, v) = json_of(&["reduce", "upper", "--ring", Z4_LAMBDA_3, "--matrix", upper]);
    assert_eq!(code, 0);
    assert_eq!(v["reconstructs"], true);
    assert_eq!(v["certificate"]["factors"][0]["family"], "T12");
    let (code, v) = json_of(&["reduce", "corner", "--ring", Z4_LAMBDA_3, "--matrix", r#"[["3","0"],["0","3"]]"#]);
    assert_eq!(code, 0);
    assert_eq!(v["alpha"]["entries"], json!([["3"]]));
    let not_hyperbolic = r#"[["1","0"],["1","3"]]"#;
    let (code, v) = json_of(&["reduce", "lower", "--ring", Z4_LAMBDA_3, "--matrix", not_hyperbolic]);
    assert_eq!(code, 1, "{v}");
    assert!(v["error"].is_object());
}

#[test]
fn normal_form_worked_instance() {
    let data = r#"{"r":1,"n":1,"a":[["2"]],"b":[["2"]],"c":[["2"]]}"#;
    let (code, v) = json_of(&["kopeiko", "validate", "--ring", Z4_LAMBDA_3, "--data", data]);
    assert_eq!((code, v), (0, json!({"valid": true})));
    let (code, v) = json_of(&["kopeiko", "build", "--ring", Z4_LAMBDA_3, "--data", data]);
    assert_eq!(code, 0);
    assert_eq!(v["matrix"]["entries"], json!([["1+2X", "2X"], ["2X", "1+2X"]]));
    let (code, v) = json_of(&["kopeiko", "reduce", "--ring", Z4_LAMBDA_3, "--data", data]);
    assert_eq!(code, 0);
    assert_eq!(v["alpha"]["entries"], json!([["1+2X"]]));
    assert_eq!(v["alpha_inv"]["entries"], json!([["1+2X"]]));
    assert_eq!(v["reconstructs"], true);
    let bad = r#"{"r":1,"n":1,"a":[["2"]],"b":[["1"]],"c":[["2"]]}"#;
    let (code, v) = json_of(&["kopeiko", "validate", "--ring", Z4_LAMBDA_3, "--data", bad]);
    assert_eq!(code, 1);
    assert_eq!(v["valid"], false);
}

#[test]
fn graded_eval_and_dilate() {
    let ring = r#"{"kind":"Graded","base":{"kind":"ModularInt","m":9},"topDegree":3}"#;
    let (code, v) = json_of(&["graded", "eval", "--ring", ring, "--b", r#"{"components":{"0":"2","1":"3"}}"#, "--x", "2"]);
    assert_eq!((code, v), (0, json!({"value": {"components": {"0": "2", "1": "6"}}})));
    let m = r#"{"n":2,"entries":[["1","Y+Y^2"],["0","1"]]}"#;
    let (code, v) = json_of(&["graded", "dilate", "--ring", ring, "--matrix", m, "--x", "0"]);
    assert_eq!(code, 0);
    assert_eq!(v["matrix"]["entries"], json!([["1", "0"], ["0", "1"]]));
    let (code, v) = json_of(&["graded", "eval", "--ring", "Z/9", "--b", "1", "--x", "1"]);
    assert_eq!(code, 2);
    assert_eq!(error_kind(&v), "UsageError");
}

#[test]
fn axiom_failures_exit_one_with_a_witness() {
    let (code, v) = json_of(&["ring", "check", "--ring", "Z", "--lambda", "2"]);
    assert_eq!(code, 1);
    let failed: Vec<&Value> = v["entries"].as_array().unwrap().iter().filter(|e| e["status"] == "fail").collect();
    assert!(!failed.is_empty());
    assert!(failed.iter().all(|e| e["witness"].is_string()));
    let (code, v) = json_of(&["form", "validate", "--ring", "Z/4", "--form", r#"{"mode":"explicit","elements":["1"]}"#]);
    assert_eq!(code, 1);
    assert_eq!(v["passed"], false);
}

#[test]
fn out_and_pretty() {
    let path = scratch("out.json");
    let _ = fs::remove_file(&path);
    let (code, stdout) = formk1(&["trunc", "decomp", "--ring", "Z", "--t", "3", "--p", "1+X+X^2", "--out", path.to_str().unwrap()]);
    assert_eq!((code, stdout.as_str()), (0, ""));
    let written: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written, json!({"a": ["1", "1", "0"]}));
    let (code, table) = formk1(&["ring", "check", "--ring", "Z/4", "--pretty"]);
    assert_eq!(code, 0);
    assert!(table.lines().any(|l| l.starts_with("distributivity") && l.contains("pass")));
    assert!(table.ends_with("all pass\n"));
}
