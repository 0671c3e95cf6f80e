//! End-to-end runs of the `wilson` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn wilson(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wilson"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("wilson-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

const PSTAR: &str = "n = 2\nt0 = 7/10\nu0 = 3/10\nt = 1/2\ntn = 4/5\nun = 2/5\n";

#[test]
fn compute_reports_matching_evaluations() {
    let out = wilson(&["compute", "--lambda", "-1,0"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v = json(&out);
    assert_eq!(v["eval_formula"], "-416/25");
    assert_eq!(v["consistent"], true);
}

#[test]
fn compute_symmetric_requires_dominant_weight() {
    let ok = wilson(&["compute-symmetric", "--lambda", "1,0"]);
    assert_eq!(ok.status.code(), Some(0), "{}", stderr(&ok));
    assert_eq!(json(&ok)["l_eigen_holds"], true);
    assert_eq!(wilson(&["compute-symmetric", "--lambda", "0,1"]).status.code(), Some(2));
}

#[test]
fn spectrum_lists_the_range() {
    let out = wilson(&["spectrum", "--range", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["points"].as_array().unwrap().len(), 5);
    assert_eq!(v["points"][0]["lambda"], serde_json::json!([0, 0]));
    assert_eq!(v["points"][0]["eval"], "1/1");
}

#[test]
fn verify_suites_pass() {
    let out = wilson(&["verify", "--suite", "relations", "--degree", "6"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(json(&out)["passed"], true);
    let out = wilson(&["verify", "--suite", "eigen,evaluation", "--lambda-sum", "3", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(json(&out)["reports"].as_array().unwrap().len(), 2);
}

#[test]
fn config_file_and_overrides() {
    let cfg = scratch("pstar.conf");
    std::fs::write(&cfg, PSTAR).unwrap();
    let path = cfg.to_str().unwrap();
    let out = wilson(&["compute", "--config", path, "--lambda", "-1,0"]);
    assert_eq!(json(&out)["eval_formula"], "-416/25");
    let out = wilson(&["compute", "--config", path, "--t", "1/3", "--lambda", "-1,0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_ne!(json(&out)["eval_formula"], "-416/25");
}

#[test]
fn missing_parameter_is_a_configuration_error() {
    let cfg = scratch("partial.conf");
    std::fs::write(&cfg, PSTAR.replace("un = 2/5\n", "")).unwrap();
    let out = wilson(&["verify", "--config", cfg.to_str().unwrap(), "--suite", "eigen"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("\"un\""), "{}", stderr(&out));
}

#[test]
fn zero_t_is_exact_only() {
    let p = ["--t0", "7/10", "--u0", "3/10", "--t", "0", "--tn", "4/5", "--un", "2/5"];
    let verify = wilson(&[&["verify", "--suite", "relations", "--degree", "3"][..], &p].concat());
    assert_eq!(verify.status.code(), Some(0), "{}", stderr(&verify));
    let quad = wilson(&[&["quadrature", "--suite", "constant"][..], &p].concat());
    assert_eq!(quad.status.code(), Some(2));
    assert!(stderr(&quad).contains("t > 0"), "{}", stderr(&quad));
}

#[test]
fn bad_input_exits_with_two() {
    assert_eq!(wilson(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
    assert_eq!(
        wilson(&["quadrature", "--suite", "constant", "--n", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(wilson(&["compute", "--lambda", "1,2,3"]).status.code(), Some(2));
    assert_eq!(
        wilson(&["compute", "--lambda", "1,0", "--t", "x"]).status.code(),
        Some(2)
    );
}

#[test]
fn output_file_and_determinism() {
    let target = scratch("eigen.json");
    let args = [
        "verify",
        "--suite",
        "eigen,duality",
        "--output",
        target.to_str().unwrap(),
    ];
    let out = wilson(&args);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let first = std::fs::read(&target).unwrap();
    let again = wilson(&["verify", "--suite", "eigen,duality"]);
    assert_eq!(again.stdout, first);
    let single = Command::new(env!("CARGO_BIN_EXE_wilson"))
        .args(["verify", "--suite", "eigen,duality"])
        .env("WILSON_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(single.stdout, first);
}

#[test]
fn quadrature_constant_passes() {
    let out = wilson(&["quadrature", "--suite", "constant"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(json(&out)["reports"][0]["passed"], true);
}
