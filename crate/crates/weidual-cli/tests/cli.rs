//! End-to-end tests over the built binary: exit codes, report content,
//! JSON round-trips, and output determinism.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_weidual"))
}

fn write_doc(content: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().expect("temp file");
    f.write_all(content.as_bytes()).expect("write doc");
    f
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

const CODE_5_3: &str =
    r#"{"type":"code","field":{"p":2,"m":1},"generator":[[1,0,1,0,0],[0,1,1,0,0],[0,0,0,1,1]]}"#;
const GRAPH_5: &str = r#"{"type":"graph","vertices":4,"edges":[[0,1],[1,2],[2,3],[3,0],[1,3]]}"#;
const SYSTEM: &str =
    r#"{"type":"setsystem","n":5,"labels":["a","b","c","d","e"],"sets":[[0,1],[0,2],[3],[3]]}"#;

#[test]
fn verify_code_reports_wei_sets_and_exits_zero() {
    let doc = write_doc(CODE_5_3);
    let out = run(&["verify", doc.path().to_str().unwrap(), "--json"]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["input"]["n"], 5);
    assert_eq!(report["input"]["k"], 3);
    let weights = run(&["weights", doc.path().to_str().unwrap(), "--json"]);
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&weights)).unwrap();
    assert_eq!(report["sequences"]["u_c"], serde_json::json!([2, 3, 5]));
    assert_eq!(report["sequences"]["v_c"], serde_json::json!([1, 4]));
    assert_eq!(report["sequences"]["d"], serde_json::json!([2, 3, 5]));
    assert_eq!(report["sequences"]["d_perp"], serde_json::json!([2, 5]));
}

#[test]
fn validate_rejects_cardinality_tables_with_exit_two() {
    let doc = write_doc(r#"{"type":"demimatroid","n":2,"s":[0,1,1,2],"t":[0,1,1,2]}"#);
    let out = run(&["validate", doc.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("(D) fails"), "stderr: {stderr}");
}

#[test]
fn graph_bc_reproduces_the_chorded_square_sequences() {
    let doc = write_doc(GRAPH_5);
    let out = run(&["graph-bc", doc.path().to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["sequences"]["b"], serde_json::json!([2, 4, 5]));
    assert_eq!(report["sequences"]["c"], serde_json::json!([3, 5]));
}

#[test]
fn plugs_emits_the_discrepancy_warning() {
    let doc = write_doc(SYSTEM);
    let out = run(&["plugs", doc.path().to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["sequences"]["u_a"], serde_json::json!([2, 3, 5]));
    assert_eq!(report["sequences"]["v_a"], serde_json::json!([1, 4]));
    let warnings = report["warnings"].as_array().unwrap();
    let text = warnings.iter().map(|w| w.as_str().unwrap()).collect::<String>();
    assert!(text.contains("[2, 4, 5]") && text.contains("[1, 3]"), "warnings: {text}");
}

#[test]
fn profile_json_round_trips_through_validate() {
    let doc = write_doc(CODE_5_3);
    let out = run(&["profile", doc.path().to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let demi = report["demimatroid"].to_string();
    let demi_doc = write_doc(&demi);
    let out = run(&["validate", demi_doc.path().to_str().unwrap()]);
    assert!(out.status.success());
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    let doc = write_doc(GRAPH_5);
    let a = run(&["verify", doc.path().to_str().unwrap(), "--json"]);
    let b = run(&["verify", doc.path().to_str().unwrap(), "--json"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn reads_documents_from_standard_input() {
    let mut child = bin()
        .args(["sets", "-", "--json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(CODE_5_3.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    // For a code demi-matroid the S/T sets coincide with U_C/V_C.
    assert_eq!(report["feature_sets"]["s"], serde_json::json!([2, 3, 5]));
    assert_eq!(report["feature_sets"]["t"], serde_json::json!([1, 4]));
}

#[test]
fn wrong_document_type_for_a_command_is_a_usage_error() {
    let doc = write_doc(GRAPH_5);
    let out = run(&["weights", doc.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let doc = write_doc(CODE_5_3);
    let out = run(&["graph-bc", doc.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_schema_is_rejected() {
    let doc = write_doc(r#"{"type":"mystery","n":3}"#);
    let out = run(&["validate", doc.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn pmd_on_uniform_and_vamos_like_inputs() {
    let doc = write_doc(r#"{"type":"uniform","n":4,"k":2}"#);
    let out = run(&["pmd", doc.path().to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["pmd"]["is_pmd"], serde_json::json!(true));
    assert_eq!(report["pmd"]["flat_sizes"], serde_json::json!([0, 1, 4]));
}

#[test]
fn verify_with_oracle_flag_adds_cross_checks() {
    let doc = write_doc(SYSTEM);
    let out = run(&[
        "verify",
        doc.path().to_str().unwrap(),
        "--json",
        "--oracle",
        "--seed",
        "42",
    ]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let names: Vec<&str> = report["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"matching vs exhaustive"));
    assert!(names.contains(&"equivalent characterizations"));
    assert!(report["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .all(|v| v["ok"].as_bool().unwrap()));
}

#[test]
fn max_n_flag_gates_large_scans() {
    // 21 elements exceed the default cap of 20.
    let doc = write_doc(r#"{"type":"uniform","n":21,"k":2}"#);
    let out = run(&["profile", doc.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["profile", doc.path().to_str().unwrap(), "--max-n", "21"]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let out = run(&["profile", doc.path().to_str().unwrap(), "--max-n", "64"]);
    assert_eq!(out.status.code(), Some(2));
}
