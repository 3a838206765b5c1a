//! End-to-end checks of the command-line surface: exit codes, output
//! formats, batch mode, and byte-stable re-runs.

use std::process::{Command, Output};

fn gentab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gentab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn all_suites_pass_with_exit_zero() {
    for suite in [
        "appendix-d5-split",
        "appendix-d5-twisted",
        "e6-tables",
        "d4-tables",
        "fourier",
        "coxeter-counts",
    ] {
        let out = gentab(&["verify", suite]);
        assert_eq!(out.status.code(), Some(0), "suite {}", suite);
        let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(report["pass"], serde_json::json!(true), "suite {}", suite);
    }
}

#[test]
fn e6_tables_accepts_a_scenario_q() {
    let out = gentab(&["verify", "e6-tables", "--q", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let ids: Vec<&str> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    assert!(ids.iter().any(|id| id.starts_with("scenario/q=4")));
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let out = gentab(&["verify", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn hecke_single_value() {
    let out = gentab(&[
        "hecke",
        "--type",
        "D5",
        "--label",
        "1.31",
        "--word",
        "1,2,3,4,5",
        "--format",
        "text",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "q^3");

    let out = gentab(&[
        "hecke", "--type", "B4", "--label", ".4", "--word", "t,1,2,3", "--format", "text",
    ]);
    assert_eq!(stdout(&out).trim(), "-q^3");
}

#[test]
fn hecke_batch_mode() {
    let dir = std::env::temp_dir();
    let path = dir.join("gentab_batch_test.json");
    std::fs::write(
        &path,
        r#"[{"label": "5.", "word": "1,2,3,4,5"}, {"label": "11.3", "word": "1,2,3,4"}]"#,
    )
    .unwrap();
    let out = gentab(&["hecke", "--type", "D5", "--batch", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let results = v["results"].as_array().unwrap();
    assert_eq!(results[0]["value"], "q^5");
    assert_eq!(results[1]["value"], "-q^3");
    std::fs::remove_file(&path).ok();
}

#[test]
fn hecke_rejects_the_size_four_variant_label() {
    let out = gentab(&[
        "hecke", "--type", "D5", "--label", ".211", "--word", "1,2,3,4",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains(".221"), "suggests the valid label: {}", err);
}

#[test]
fn emit_formats() {
    let out = gentab(&["emit", "table4", "--format", "csv"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[1], "f1,q^2,-q^2,q^3,-q^3,0");
    assert_eq!(lines[2], "f2,0,0,q^4,-q^4,0");

    let out = gentab(&["emit", "table1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["columns"].as_array().unwrap().len(), 9);
    assert_eq!(v["rows"].as_array().unwrap().len(), 6);

    let out = gentab(&["emit", "table3", "--format", "text"]);
    assert_eq!(stdout(&out).lines().count(), 10); // header + 9 rows

    let out = gentab(&["emit", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reruns_are_byte_identical() {
    for args in [
        vec!["emit", "table3"],
        vec!["bruhat", "--case", "D5-twisted", "--solve-signs"],
        vec!["symbols", "--case", "D5-split", "--list"],
        vec!["scenario", "--q", "7", "--type", "e6-split"],
    ] {
        let a = stdout(&gentab(&args));
        let b = stdout(&gentab(&args));
        assert_eq!(a, b, "{:?}", args);
        assert!(!a.is_empty());
    }
}

#[test]
fn scenario_fields() {
    let out = gentab(&["scenario", "--q", "8", "--type", "e6-split"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["k_action_trivial"], serde_json::json!(false));
    assert_eq!(v["class_count"], serde_json::json!(3));
    assert_eq!(v["f_invariant_cuspidal_count"], serde_json::json!(2));
    assert_eq!(v["unipotent_character_count"], serde_json::json!(30));

    let out = gentab(&["scenario", "--q", "8", "--type", "e6-twisted"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["k_action_trivial"], serde_json::json!(true));
    assert_eq!(v["class_count"], serde_json::json!(9));

    // powers of three and non prime powers are rejected
    for bad_q in ["9", "6"] {
        let out = gentab(&["scenario", "--q", bad_q, "--type", "e6-split"]);
        assert_eq!(out.status.code(), Some(2), "q = {}", bad_q);
    }
}

#[test]
fn sigma_writes_table_to_file() {
    let dir = std::env::temp_dir();
    let path = dir.join("gentab_sigma_table3.json");
    let out = gentab(&[
        "sigma",
        "--case",
        "e6",
        "--q",
        "4",
        "--twisted",
        "false",
        "--emit",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["basis"]["rows"].as_array().unwrap().len(), 9);
    std::fs::remove_file(&path).ok();
}

#[test]
fn bruhat_audit_contains_per_phi_breakdown() {
    let out = gentab(&["bruhat", "--case", "D5-split", "--solve-signs"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["signs"]["gamma_82"], serde_json::json!(1));
    assert_eq!(v["signs"]["gamma_6211"], serde_json::json!(1));
    let audits = v["audits"].as_array().unwrap();
    assert_eq!(audits.len(), 2);
    assert_eq!(audits[0]["uniform_part"], "q^5");
    assert_eq!(audits[1]["uniform_part"], "q^6 + q^5");
    // per-character records are present for the audit trail
    let instances = v["instances"].as_array().unwrap();
    assert!(instances[0]["records"].as_array().unwrap().len() >= 4);
    // the subregular instance carries the label-convention note
    assert!(v["notes"]
        .as_array()
        .unwrap()
        .iter()
        .any(|n| n.as_str().unwrap().contains("(.221)")));
}

#[test]
fn symbols_fourier_row_roles() {
    let out = gentab(&[
        "symbols",
        "--case",
        "D4-twisted",
        "--fourier",
        "--family",
        "1",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let roles: Vec<&str> = v["row_roles"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r.as_str().unwrap())
        .collect();
    assert_eq!(roles.iter().filter(|r| **r == "non-uniform").count(), 1);
    // the twisted fork case designates the third row
    assert_eq!(roles[2], "non-uniform");
}
