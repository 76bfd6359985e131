//! End-to-end tests of the command-line binary: exit codes, schema
//! conformance and byte-level determinism.

use nodal_families::report::{validate, CENSUS_SCHEMA, INVARIANTS_SCHEMA, TORUS_SCHEMA, VERIFY_SCHEMA};
use serde_json::Value;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_nodal-families"))
}

fn parse_stdout(out: &std::process::Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn verify_all_passes_and_validates() {
    let out = bin().args(["verify", "--suite", "all"]).output().unwrap();
    assert!(out.status.success());
    let v = parse_stdout(&out);
    let schema: Value = serde_json::from_str(VERIFY_SCHEMA).unwrap();
    validate(&v, &schema).unwrap();
    let reports = v.as_array().unwrap();
    assert!(reports.len() >= 12);
    assert!(reports.iter().all(|r| r["pass"] == Value::Bool(true)));
}

#[test]
fn verify_subsuite_and_unknown() {
    let out = bin()
        .args(["verify", "--suite", "segre-igusa"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(parse_stdout(&out).as_array().unwrap().len(), 3);

    let out = bin().args(["verify", "--suite", "nosuch"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn nodes_census_validates_and_is_deterministic() {
    let dir = std::env::temp_dir().join("nodal_families_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let params = dir.join("fourteen.json");
    std::fs::write(
        &params,
        r#"{
  "family": "fourteen-nodal",
  "params": {
    "lambda": "-1",
    "mu": "-2",
    "a": ["1", "-3"],
    "b": ["1", "2"],
    "k1": "2*x0 + x1 + x2",
    "k2": "2*x0 + 2*x1 + x2",
    "alpha1": "1/10",
    "alpha2": "1/10"
  }
}"#,
    )
    .unwrap();
    let run = || {
        bin()
            .args([
                "--seed",
                "42",
                "nodes",
                "--params",
                params.to_str().unwrap(),
                "--starts",
                "400",
            ])
            .output()
            .unwrap()
    };
    let out1 = run();
    assert!(out1.status.success(), "{}", String::from_utf8_lossy(&out1.stderr));
    let v = parse_stdout(&out1);
    let schema: Value = serde_json::from_str(CENSUS_SCHEMA).unwrap();
    validate(&v, &schema).unwrap();
    assert_eq!(v["structural_count"], 14);
    assert_eq!(v["distinct_points"], 14);
    assert_eq!(v["a1_count"], 14);
    assert_eq!(v["agreement"], Value::Bool(true));
    // byte-identical on repeat with the same seed
    let out2 = run();
    assert_eq!(out1.stdout, out2.stdout);
    // and with a capped worker pool
    let out3 = bin()
        .env("NODAL_FAMILIES_THREADS", "1")
        .args([
            "--seed",
            "42",
            "nodes",
            "--params",
            params.to_str().unwrap(),
            "--starts",
            "400",
        ])
        .output()
        .unwrap();
    assert_eq!(out1.stdout, out3.stdout);
}

#[test]
fn nodes_tetrahedral_and_thirteen_counts() {
    let dir = std::env::temp_dir().join("nodal_families_cli_tetra");
    std::fs::create_dir_all(&dir).unwrap();
    let tetra = dir.join("tetra.json");
    std::fs::write(
        &tetra,
        r#"{
  "family": "tetrahedral",
  "params": {
    "planes": [
      "x0 + 2*x1 + x2 + 2*x3",
      "-2*x0 + x1 + x2",
      "-x0 - 2*x2",
      "-2*x0 + x2 + 2*x3"
    ]
  }
}"#,
    )
    .unwrap();
    let out = bin()
        .args([
            "--seed",
            "5",
            "nodes",
            "--params",
            tetra.to_str().unwrap(),
            "--starts",
            "400",
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = parse_stdout(&out);
    assert_eq!(v["distinct_points"], 12);
    assert_eq!(v["agreement"], serde_json::Value::Bool(true));

    let thirteen = dir.join("thirteen.json");
    std::fs::write(
        &thirteen,
        r#"{
  "family": "tetrahedral-thirteen",
  "params": {
    "planes": [
      "x0 + 2*x1 + x2 + 2*x3",
      "-2*x0 + x1 + x2",
      "-x0 - 2*x2"
    ],
    "point": ["1", "-1", "2", "-199/100"]
  }
}"#,
    )
    .unwrap();
    let out = bin()
        .args([
            "--seed",
            "5",
            "nodes",
            "--params",
            thirteen.to_str().unwrap(),
            "--starts",
            "600",
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = parse_stdout(&out);
    assert_eq!(v["distinct_points"], 13);
    assert_eq!(v["structural_count"], 13);
}

#[test]
fn nodes_guard_violations_are_surfaced() {
    let dir = std::env::temp_dir().join("nodal_families_cli_guard");
    std::fs::create_dir_all(&dir).unwrap();
    let params = dir.join("broken.json");
    std::fs::write(
        &params,
        r#"{
  "family": "fourteen-nodal",
  "params": {
    "lambda": "2",
    "mu": "0",
    "a": ["1", "2"],
    "b": ["1", "3"],
    "k1": "x0 - x3",
    "k2": "x1 - x2",
    "alpha1": "1/10",
    "alpha2": "1/10"
  }
}"#,
    )
    .unwrap();
    let out = bin()
        .args(["nodes", "--params", params.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("formula breaks down"), "stderr: {err}");
}

#[test]
fn invariants_json_and_guard() {
    let out = bin()
        .args([
            "invariants", "--n", "3", "--delta", "6", "--g", "0", "--r", "3",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v = parse_stdout(&out);
    let schema: Value = serde_json::from_str(INVARIANTS_SCHEMA).unwrap();
    validate(&v, &schema).unwrap();
    assert_eq!(v["dimensions"]["h1_minus_h0_w"], 2);
    assert_eq!(v["dimensions"]["h1_minus_h0_z"], 6);
    assert_eq!(v["dimensions"]["dim_triples"], 7);
    assert_eq!(v["chi_normal_bundle"], 9);
    assert_eq!(v["twistor_delta"], 6);
    assert_eq!(v["kernel_codimension"], 2);

    let out = bin()
        .args([
            "invariants", "--n", "3", "--delta", "0", "--g", "0", "--r", "3",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invariants_twistor_table() {
    for (n, delta) in [(3i64, 6i64), (4, 12), (5, 20), (6, 30)] {
        let out = bin()
            .args([
                "invariants",
                "--n",
                &n.to_string(),
                "--delta",
                &delta.to_string(),
                "--g",
                "0",
                "--r",
                &n.to_string(),
            ])
            .output()
            .unwrap();
        assert!(out.status.success());
        let v = parse_stdout(&out);
        assert_eq!(v["twistor_delta"], delta);
    }
}

#[test]
fn torus_actions() {
    let a = ["--a", "1,7/2,7/2,1"];
    // locus
    let out = bin()
        .args(["torus"].iter().chain(&a).chain(&["locus"]).copied().collect::<Vec<_>>())
        .output()
        .unwrap();
    assert!(out.status.success());
    let v = parse_stdout(&out);
    let schema: Value = serde_json::from_str(TORUS_SCHEMA).unwrap();
    validate(&v, &schema).unwrap();
    let s_num = v["locus"]["s"]["numerator"].as_str().unwrap();
    assert!(s_num.contains("t"), "{s_num}");
    // doublepoints
    let out = bin()
        .args(
            ["torus"]
                .iter()
                .chain(&a)
                .chain(&["doublepoints"])
                .copied()
                .collect::<Vec<_>>(),
        )
        .output()
        .unwrap();
    assert!(out.status.success());
    let v = parse_stdout(&out);
    validate(&v, &schema).unwrap();
    let dps = v["double_points"].as_array().unwrap();
    assert!(dps
        .iter()
        .any(|d| (d["s"].as_f64().unwrap() - 0.25).abs() < 1e-9
            && (d["alpha_product"].as_f64().unwrap() - 16.0 / 9.0).abs() < 1e-9));
    // cusps
    let out = bin()
        .args(["torus"].iter().chain(&a).chain(&["cusps"]).copied().collect::<Vec<_>>())
        .output()
        .unwrap();
    assert!(out.status.success());
    let v = parse_stdout(&out);
    validate(&v, &schema).unwrap();
    assert_eq!(v["cusps"]["real_cusps"].as_array().unwrap().len(), 2);
    assert_eq!(v["cusps"]["complex_count"], 6);
}

#[test]
fn torus_plot_writes_windows() {
    let dir = std::env::temp_dir().join("nodal_families_cli_plot");
    std::fs::create_dir_all(&dir).unwrap();
    let prefix = dir.join("fig");
    let out = bin()
        .args([
            "--out",
            prefix.to_str().unwrap(),
            "torus",
            "--a",
            "1,7/2,7/2,1",
            "plot",
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    for window in ["main", "zoom"] {
        let path = format!("{}_{}.csv", prefix.to_str().unwrap(), window);
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.starts_with("t,s,alpha_product,segment_id\n"));
        assert!(text.lines().count() > 100);
    }
    // the marked double point appears in the main window samples
    let main = std::fs::read_to_string(format!("{}_main.csv", prefix.to_str().unwrap())).unwrap();
    let hit = main.lines().skip(1).any(|line| {
        let f: Vec<f64> = line
            .split(',')
            .take(3)
            .map(|x| x.parse::<f64>().unwrap())
            .collect();
        (f[1] - 0.25).abs() < 1e-6 && (f[2] - 16.0 / 9.0).abs() < 1e-6
    });
    assert!(hit);
}
