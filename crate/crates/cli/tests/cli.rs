use nq_core::finite_group::GroupCalculus;
use serde_json::Value;
use std::process::{Command, Output};

fn nq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nq")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn verify_s3_hodge() {
    let o = nq(&["verify", "--suite", "s3-hodge"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["suite"], "s3-hodge");
    assert_eq!(v["pass"], true);
    assert!(v["checks"].as_array().unwrap().iter().any(|c| c["id"] == "hodge_order_6"));
}

#[test]
fn verify_sl2_hodge_has_hecke_check() {
    let o = nq(&["verify", "--suite", "sl2-hodge"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("hecke_degree2"));
}

#[test]
fn verify_writes_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let o = nq(&["verify", "--suite", "qplane", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("pass qplane"));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["suite"], "qplane");
    assert!(v["ms"].is_u64());
}

#[test]
fn unknown_suite_is_usage_error() {
    let o = nq(&["verify", "--suite", "s4-hodge"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("s4-hodge"));
}

#[test]
fn bad_field_is_usage_error() {
    let o = nq(&["--field", "reals", "verify", "--suite", "qplane"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn s3_over_ratfun_is_construction_error() {
    let o = nq(&["--field", "ratfun", "verify", "--suite", "s3-hodge"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn max_degree_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_nq"))
        .args(["verify", "--suite", "braided-factorials"])
        .env("NQ_MAX_DEGREE", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let ids: Vec<String> = json(&o)["checks"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap().to_string()).collect();
    assert!(ids.contains(&"factorisation_sl2_minus_n3".to_string()));
    assert!(!ids.iter().any(|id| id.ends_with("_n4")));
}

#[test]
fn s3_hodge_table() {
    let o = nq(&["table", "--example", "s3", "--what", "hodge", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["rows"].as_array().unwrap().len(), 12);
}

#[test]
fn qplane_relations_table() {
    let o = nq(&["table", "--example", "qplane", "--what", "relations"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("# qplane relations"));
    assert_eq!(text.lines().count(), 6);
}

#[test]
fn sl2_exp_table_covers_all_degrees() {
    let o = nq(&["table", "--example", "sl2", "--what", "exp", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let degrees: std::collections::BTreeSet<u64> = v["rows"].as_array().unwrap().iter().map(|r| r[0].as_u64().unwrap()).collect();
    assert_eq!(degrees.into_iter().collect::<Vec<_>>(), vec![0, 1, 2, 3, 4]);
}

#[test]
fn csv_table_has_header() {
    let o = nq(&["table", "--example", "s3", "--what", "dims", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("degree,dim"));
    assert_eq!(text.lines().count(), 6);
}

#[test]
fn missing_table_is_usage_error() {
    assert_eq!(nq(&["table", "--example", "qplane", "--what", "killing"]).status.code(), Some(2));
    assert_eq!(nq(&["table", "--example", "s4", "--what", "dims"]).status.code(), Some(2));
}

fn maxwell_on(source: &Value) -> Output {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("j.json");
    std::fs::write(&path, source.to_string()).unwrap();
    nq(&["maxwell", path.to_str().unwrap()])
}

#[test]
fn maxwell_point_source() {
    let c = GroupCalculus::s3().unwrap();
    let o = maxwell_on(&c.one_form_to_json(&c.point_source(0)));
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["residual_zero"], true);
    let alpha = c.parse_one_form(&v["alpha"]).unwrap();
    assert!(!alpha.is_zero());
}

#[test]
fn maxwell_rejects_theta() {
    let c = GroupCalculus::s3().unwrap();
    let labels = c.lambda().space().labels().to_vec();
    let theta: serde_json::Map<String, Value> = labels.into_iter().map(|l| (l, Value::from("1"))).collect();
    let o = maxwell_on(&Value::Object(theta));
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["error"], "not coexact");
    assert_eq!(v["reason"], "integral pairing nonzero");
}

#[test]
fn maxwell_zero_source() {
    let o = maxwell_on(&serde_json::json!({}));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["alpha"], serde_json::json!({}));
}

#[test]
fn maxwell_malformed_source() {
    let o = maxwell_on(&serde_json::json!({"e_q": 1}));
    assert_eq!(o.status.code(), Some(2));
}
