use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn psho(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_psho")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("psho-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn state_prints_the_first_associated_state() {
    let o = psho(&["state", "--k", "0", "--n", "1", "--m", "1", "--repr", "creation"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "-2*g*C+\n");
}

#[test]
fn state_json_has_all_representations() {
    let o = psho(&["state", "--k", "0", "--n", "1", "--m", "2", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["label"], "(0,1,2)");
    assert_eq!(v["creation"], "B+");
    for key in ["uvw", "zzb"] {
        assert!(v[key].is_string());
    }
}

#[test]
fn norm_table_contains_first_block() {
    let o = psho(&["tabulate", "--what", "N", "--max-k", "2", "--max-n", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().any(|l| l.split_whitespace().collect::<Vec<_>>() == ["0", "1", "8*lam*g^2"]));
}

#[test]
fn tables_come_in_three_formats() {
    for format in ["text", "csv", "json"] {
        let o = psho(&["tabulate", "--what", "ab", "--max-n", "2", "--format", format]);
        assert!(o.status.success(), "{format}");
    }
    let o = psho(&["tabulate", "--what", "ladder-coeffs", "--max-total", "1", "--format", "json"]);
    let rows: Vec<Value> = serde_json::from_slice(&o.stdout).unwrap();
    assert!(rows.iter().all(|r| r["state"].is_string() && r["coefficient"].is_string()));
}

#[test]
fn commutator_evaluates_expressions() {
    let o = psho(&["commutator", "[H,A+] - 2*lam*A+"]);
    assert_eq!(stdout(&o), "0\n");
    let o = psho(&["commutator", "H", "A+"]);
    let direct = psho(&["commutator", "2*lam*A+"]);
    assert_eq!(stdout(&o), stdout(&direct));
}

#[test]
fn inner_pairs_labelled_states() {
    let o = psho(&["inner", "0,1,0", "(0,1,2)"]);
    assert_eq!(stdout(&o), "8*lam*g^2\n");
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(psho(&["commutator", "[H,"]).status.code(), Some(2));
    assert_eq!(psho(&["commutator", "Foo"]).status.code(), Some(2));
    assert_eq!(psho(&["state", "--k", "0", "--n", "1", "--m", "3"]).status.code(), Some(2));
    assert_eq!(psho(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(psho(&["inner", "1,2", "0,0,0"]).status.code(), Some(2));
    let bad = scratch("missing-dir").join("x").join("r.json");
    assert_eq!(psho(&["verify", "--suite", "ladder", "--json", bad.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn integrals_report_carries_the_computed_relation() {
    let path = scratch("integrals.json");
    let o = psho(&["verify", "--suite", "integrals", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let notes: Vec<&str> = report["records"]
        .as_array()
        .unwrap()
        .iter()
        .filter_map(|r| r["note"].as_str())
        .collect();
    assert!(notes.iter().any(|n| n.contains("[R0,R3]")), "{notes:?}");
}

#[test]
fn failing_identities_exit_with_one() {
    let o = psho(&["verify", "--suite", "biortho", "--max-total", "2", "--max-n", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("failed biortho.cross.(0,2)-(1,0)"));
}

fn check_against_schema(value: &Value, schema: &Value) {
    if let Some(options) = schema["enum"].as_array() {
        assert!(options.contains(value), "{value} not in {options:?}");
        return;
    }
    match schema["type"].as_str().unwrap() {
        "object" => {
            let obj = value.as_object().expect("object");
            let props = schema["properties"].as_object().unwrap();
            for key in schema["required"].as_array().unwrap() {
                assert!(obj.contains_key(key.as_str().unwrap()), "missing {key}");
            }
            for (k, v) in obj {
                check_against_schema(v, props.get(k).unwrap_or_else(|| panic!("unexpected key {k}")));
            }
        }
        "array" => value.as_array().unwrap().iter().for_each(|v| check_against_schema(v, &schema["items"])),
        "string" => assert!(value.is_string()),
        "integer" => assert!(value.is_u64()),
        other => panic!("schema type {other}"),
    }
}

#[test]
fn reports_follow_the_schema_and_are_deterministic() {
    let schema: Value = serde_json::from_str(include_str!("../report.schema.json")).unwrap();
    let run = || stdout(&psho(&["verify", "--suite", "algebra", "--json", "-"]));
    let (first, second) = (run(), run());
    assert_eq!(first, second);
    let report: Value = serde_json::from_str(&first).unwrap();
    check_against_schema(&report, &schema);
    assert_eq!(report["summary"]["total"], report["records"].as_array().unwrap().len());
}

#[test]
fn merged_reports_recount() {
    let (a, b) = (scratch("a.json"), scratch("b.json"));
    psho(&["verify", "--suite", "ladder", "--json", a.to_str().unwrap()]);
    psho(&["verify", "--suite", "gl3", "--json", b.to_str().unwrap()]);
    let o = psho(&["report", "--merge", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let merged: Value = serde_json::from_slice(&o.stdout).unwrap();
    let suites: Vec<&str> = merged["summary"]["suites"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["suite"].as_str().unwrap())
        .collect();
    assert_eq!(suites, ["ladder", "factorization", "gl3"]);
    let total = merged["summary"]["verified"].as_u64().unwrap() + merged["summary"]["failed"].as_u64().unwrap();
    assert_eq!(total, merged["records"].as_array().unwrap().len() as u64);
}
