//! End-to-end tests of the `vosper` binary: report shapes against the
//! shipped schemas, exit-code contract, and byte-determinism.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

fn vosper(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vosper"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn vosper_with_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vosper"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    assert!(
        output.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).expect("valid JSON on stdout")
}

fn schema(name: &str) -> jsonschema::Validator {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "docs", name]
        .iter()
        .collect();
    let text = std::fs::read_to_string(&path).expect("schema file readable");
    let value: serde_json::Value = serde_json::from_str(&text).expect("schema is JSON");
    jsonschema::validator_for(&value).expect("schema compiles")
}

fn assert_valid(validator: &jsonschema::Validator, instance: &serde_json::Value) {
    let errors: Vec<String> = validator
        .iter_errors(instance)
        .map(|e| format!("{e} at {}", e.instance_path()))
        .collect();
    assert!(errors.is_empty(), "schema violations: {errors:?}");
}

#[test]
fn analyze_cayley_report_values_and_schema() {
    let out = vosper(&["analyze", "--group", "Z7", "--subset", "1,2,3", "--oracle"]);
    let report = stdout_json(&out);
    assert_valid(&schema("analyze.v1.schema.json"), &report);

    assert_eq!(report["kappa"], 3);
    assert_eq!(report["kappa2"], 3);
    assert_eq!(report["vosperian"], false);
    assert_eq!(report["superconnected"], true);
    assert_eq!(report["cayley"]["condition"], "cond_iii");
    assert_eq!(report["cayley"]["superconn_via"], "coprogression");
    assert_eq!(report["cayley"]["coprogression_witness"]["ratio"], 1);
    assert_eq!(report["oracle"]["vosperian"], false);
    assert_eq!(report["oracle"]["superconnected"], true);
}

#[test]
fn analyze_directed_cycle_witness() {
    let out = vosper(&["analyze", "--group", "Z5", "--subset", "1"]);
    let report = stdout_json(&out);
    assert_valid(&schema("analyze.v1.schema.json"), &report);
    assert_eq!(report["vosperian"], false);
    assert_eq!(report["superconnected"], true);
    assert_eq!(report["cayley"]["superconn_witness"]["ratio"], 1);
}

#[test]
fn analyze_periodic_set_routes_to_direct_decider() {
    let out = vosper(&["analyze", "--group", "Z4", "--subset", "1,3"]);
    let report = stdout_json(&out);
    assert_valid(&schema("analyze.v1.schema.json"), &report);
    assert_eq!(report["cayley"]["aperiodic"], false);
    assert_eq!(report["cayley"]["superconn_via"], "oracle_only");
    assert_eq!(report["cayley"]["superconnected"], true);
}

#[test]
fn analyze_edge_list_input() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, "# complete digraph on 4 vertices\n4 12\n").unwrap();
    for u in 0..4 {
        for v in 0..4 {
            if u != v {
                writeln!(file, "{u} {v}").unwrap();
            }
        }
    }
    let path = file.path().to_str().unwrap().to_string();
    let out = vosper(&["analyze", "--edges", &path]);
    let report = stdout_json(&out);
    assert_valid(&schema("analyze.v1.schema.json"), &report);
    assert_eq!(report["vosperian"], true);
    assert_eq!(report["kappa"], 3);
    assert_eq!(report["input"]["kind"], "edges");
    assert_eq!(report["cayley"], serde_json::Value::Null);
}

#[test]
fn analyze_exit_codes() {
    assert_eq!(
        vosper(&["analyze", "--group", "E8", "--subset", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        vosper(&["analyze", "--group", "Z7", "--subset", "9"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        vosper(&["analyze", "--group", "Z4", "--subset", "2"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        vosper(&["analyze", "--group", "Z4", "--subset", "0,1"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        vosper(&["analyze", "--edges", "/nonexistent/file"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn enumerate_csv_and_exit_codes() {
    let out = vosper(&["enumerate", "--max-order", "6", "--oracle"]);
    assert_eq!(out.status.code(), Some(0), "all rows must agree");
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "group,subset,degree,kappa,kappa2,vosperian_thm,vosperian_oracle,superconn_thm,superconn_oracle,condition,witness,agreement"
    );
    let rows: Vec<&str> = lines.collect();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r.ends_with(",true")));

    // Trivial group: header only.
    let out = vosper(&["enumerate", "--max-order", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 1);

    // Above the catalog cap.
    assert_eq!(
        vosper(&["enumerate", "--max-order", "13"]).status.code(),
        Some(2)
    );
}

#[test]
fn enumerate_json_records_match_schema() {
    let out = vosper(&["enumerate", "--max-order", "5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let validator = schema("audit-record.v1.schema.json");
    let text = String::from_utf8(out.stdout).unwrap();
    let mut count = 0;
    for line in text.lines() {
        let record: serde_json::Value = serde_json::from_str(line).expect("one object per line");
        assert_valid(&validator, &record);
        count += 1;
    }
    assert!(count > 20);
}

#[test]
fn verify_report_schema_and_exit() {
    let out = vosper(&["verify", "--suite", "lemma4", "--seed", "42"]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_valid(&schema("verify.v1.schema.json"), &report);
    assert_eq!(report["passed"], true);
    assert_eq!(report["instances"], 10000);

    assert_eq!(
        vosper(&["verify", "--suite", "nope"]).status.code(),
        Some(2)
    );
}

#[test]
fn atoms_report_schema_and_examples() {
    let out = vosper(&["atoms", "--group", "Z5", "--subset", "1", "--k", "2"]);
    let report = stdout_json(&out);
    assert_valid(&schema("atoms.v1.schema.json"), &report);
    assert_eq!(report["kappa_k"], 1);
    assert_eq!(report["positive_atoms"].as_array().unwrap().len(), 5);
    assert_eq!(report["negative_atoms"].as_array().unwrap().len(), 5);

    // Complete digraph: not 2-separable.
    let out = vosper(&["atoms", "--group", "Z5", "--subset", "1,2,3,4", "--k", "2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn analyze_csv_row() {
    let out = vosper(&[
        "analyze", "--group", "Z7", "--subset", "1,2,3", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert!(lines
        .next()
        .unwrap()
        .starts_with("input,vertices,degree,kappa"));
    let row = lines.next().unwrap();
    assert!(row.contains("cond_iii") && row.contains("coprogression"));
    assert_eq!(lines.next(), None);
}

#[test]
fn output_bytes_are_deterministic() {
    let a = vosper(&["analyze", "--group", "Z7", "--subset", "1,2,3", "--oracle"]);
    let b = vosper(&["analyze", "--group", "Z7", "--subset", "1,2,3", "--oracle"]);
    assert_eq!(a.stdout, b.stdout);

    let a = vosper(&["enumerate", "--max-order", "5"]);
    let b = vosper(&["enumerate", "--max-order", "5"]);
    assert_eq!(a.stdout, b.stdout);

    let a = vosper(&[
        "verify", "--suite", "duality", "--seed", "7", "--format", "json",
    ]);
    let b = vosper(&[
        "verify", "--suite", "duality", "--seed", "7", "--format", "json",
    ]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn worker_count_does_not_change_output() {
    let default_pool = vosper(&["enumerate", "--max-order", "6"]);
    let single = vosper_with_env(&["enumerate", "--max-order", "6"], "VOSPER_THREADS", "1");
    let four = vosper_with_env(&["enumerate", "--max-order", "6"], "VOSPER_THREADS", "4");
    assert_eq!(default_pool.stdout, single.stdout);
    assert_eq!(default_pool.stdout, four.stdout);
}
