use std::process::{Command, Output};

use curvesym_cli::{run, Record, RunConfig, RunOutcome, Suite, EXIT_MISMATCH};
use serde_json::Value;

fn curvesym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_curvesym"))
        .args(args)
        .env_remove(curvesym_cli::OUT_DIR_ENV)
        .output()
        .expect("binary runs")
}

fn records(out: &Output) -> Vec<Value> {
    let v: Value = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    v.as_array().expect("array").clone()
}

fn without_runtime(mut rows: Vec<Value>) -> Vec<Value> {
    for r in &mut rows {
        r.as_object_mut().unwrap().remove("runtime_ms");
    }
    rows
}

#[test]
fn full_verify_passes() {
    let out = curvesym(&[
        "verify", "--q", "1", "--m", "1", "--n-max", "8", "--suites", "all",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let rows = records(&out);
    assert!(rows.len() > 24);
    assert!(rows.iter().all(|r| r["match"] == true));
    let rho2 = rows
        .iter()
        .find(|r| r["check_id"] == "rho_n" && r["n"] == 2)
        .unwrap();
    assert_eq!(rho2["computed"], "2");
    // f, normalized to a positive leading coefficient.
    assert_eq!(rho2["witness"], "x1^5 - 3*x1^2*x2*x3 + x1*x2^3 + x3^3");
}

#[test]
fn invariants_report_gamma_and_resurgence() {
    let out = curvesym(&["invariants", "--q", "1", "--m", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = records(&out);
    let gamma = rows
        .iter()
        .find(|r| r["check_id"] == "gamma_closed")
        .unwrap();
    assert_eq!(gamma["closed_form"], "10");
    assert_eq!(gamma["computed"], "10");
    let res = rows.iter().find(|r| r["check_id"] == "resurgence").unwrap();
    assert_eq!(res["closed_form"], "4/3");
    assert!(res.get("n").is_none());
}

#[test]
fn empty_grid_is_a_config_error() {
    let out = curvesym(&["report", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let out = curvesym(&["verify", "--q", "1", "--m", "1", "--n-max", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = curvesym(&["verify", "--q", "1", "--m", "1", "--suites", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invalid_pairs_are_reported_not_fatal() {
    let out = curvesym(&["regularity", "--q", "1", "--m", "1,3"]);
    assert_eq!(out.status.code(), Some(0));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("(1, 3)"), "{stderr}");
    assert!(records(&out).iter().all(|r| r["m"] == 1));
    let out = curvesym(&["regularity", "--q", "1", "--m", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic_up_to_runtime() {
    let args = ["invariants", "--q", "2,1", "--m", "1", "--n-max", "5"];
    let a = without_runtime(records(&curvesym(&args)));
    let b = without_runtime(records(&curvesym(&args)));
    assert_eq!(a, b);
    let keys: Vec<(u64, u64, u64)> = a
        .iter()
        .map(|r| {
            (
                r["q"].as_u64().unwrap(),
                r["m"].as_u64().unwrap(),
                r["n"].as_u64().unwrap_or(0),
            )
        })
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn csv_has_the_json_columns() {
    let json = records(&curvesym(&[
        "regularity",
        "--q",
        "1",
        "--m",
        "2",
        "--n-max",
        "3",
    ]));
    let out = curvesym(&[
        "regularity",
        "--q",
        "1",
        "--m",
        "2",
        "--n-max",
        "3",
        "--format",
        "csv",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "q,m,n,check_id,computed,closed_form,match,witness,runtime_ms"
    );
    assert_eq!(lines.count(), json.len());
}

#[test]
fn out_flag_and_env_directory() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("nested").join("r.json");
    let out = curvesym(&[
        "regularity",
        "--q",
        "1",
        "--m",
        "1",
        "--suites",
        "regularity",
        "--out",
        file.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&file).unwrap();
    assert!(text.starts_with("[\n"));

    let out = Command::new(env!("CARGO_BIN_EXE_curvesym"))
        .args(["report", "--q", "1", "--m", "1", "--suites", "regularity"])
        .env(curvesym_cli::OUT_DIR_ENV, dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(dir.path().join("report-report.csv")).unwrap();
    assert!(text.starts_with("q,m,n,check_id"));
}

#[test]
fn oracle_mode_adds_saturation_checks() {
    let mut config = RunConfig::new(vec![1], vec![1]);
    config.n_max = 3;
    let plain = run(&config).unwrap();
    assert!(!plain
        .records
        .iter()
        .any(|r| r.check_id == "symbolic_oracle"));
    config.oracle = true;
    let with = run(&config).unwrap();
    let oracle: Vec<&Record> = with
        .records
        .iter()
        .filter(|r| r.check_id == "symbolic_oracle")
        .collect();
    assert_eq!(oracle.len(), 3);
    assert!(oracle.iter().all(|r| r.matched));
}

#[test]
fn mismatch_sets_exit_code() {
    let mut config = RunConfig::new(vec![1], vec![1]);
    config.suites = [Suite::Regularity].into();
    let mut outcome: RunOutcome = run(&config).unwrap();
    assert_eq!(outcome.exit_code(), 0);
    outcome.records[0].matched = false;
    assert_eq!(outcome.exit_code(), EXIT_MISMATCH);
}
