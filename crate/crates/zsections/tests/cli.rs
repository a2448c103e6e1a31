use std::path::Path;
use std::process::{Command, Output};

use zsections::report::{eval_summary, read_eval_rows, ErrorReport, EvalSummary};

fn zsections(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zsections"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn summary(csv: &Path) -> serde_json::Value {
    let text = std::fs::read_to_string(csv.with_extension("json")).unwrap();
    serde_json::from_str(&text).unwrap()
}

fn path_arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn single_point_eval() {
    let out = zsections(&["eval", "--t", "100", "--scheme", "spira"]);
    assert!(out.status.success());
    let rows = read_eval_rows(out.stdout.as_slice()).unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0].scheme, "spira");
    assert!(rows[0].abs_err <= 5.0 * 100f64.powf(-0.25));
    let json: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(json["command"], "eval");
    assert!(json["provenance"].as_str().is_some_and(|s| !s.is_empty()));
}

#[test]
fn config_errors_exit_with_2() {
    for args in [
        &["eval", "--t", "100"][..],
        &["eval", "--scheme", "spira"],
        &["eval", "--t", "100", "--scheme", "bogus"],
        &["eval", "--range", "419:412:0.01", "--scheme", "spira"],
        &["eval", "--t", "1", "--scheme", "afe"],
        &["error-decay", "--t", "100,200"],
        &["error-decay", "--t", "200,100,400"],
        &["zeros", "--scheme", "spira"],
        &["figure", "fig9"],
        &["no-such-command"],
    ] {
        let out = zsections(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn oracle_failure_is_a_hazard() {
    let out = zsections(&[
        "eval",
        "--t",
        "1000",
        "--scheme",
        "spira",
        "--oracle-terms",
        "1000",
        "--oracle-order",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn eval_grid_shape_and_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("eval.csv");
    let out = zsections(&[
        "eval",
        "--range",
        "412:419:0.01",
        "--scheme",
        "afe,spira,acc-coeff",
        "--out",
        path_arg(&csv),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(!text.contains('\r'));
    let rows = read_eval_rows(text.as_bytes()).unwrap();
    assert_eq!(rows.len(), 701 * 3);
    assert_eq!(rows[0].t, 412.0);
    assert_eq!(rows[1].scheme, "spira");
    assert_eq!(rows[3].t, 412.01);

    let written: EvalSummary = serde_json::from_value(summary(&csv)["summary"].clone()).unwrap();
    assert_eq!(eval_summary(&written.reference, &rows), written);
}

#[test]
fn error_report_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("decay.csv");
    let out = zsections(&["error-decay", "--out", path_arg(&csv)]);
    assert!(out.status.success());
    let rows = read_eval_rows(std::fs::File::open(&csv).unwrap()).unwrap();
    let written: ErrorReport = serde_json::from_value(summary(&csv)["summary"].clone()).unwrap();
    assert_eq!(
        ErrorReport::from_rows(&written.reference, &rows).unwrap(),
        written
    );
}

#[test]
fn thread_count_does_not_change_output() {
    let dir = tempfile::tempdir().unwrap();
    let mut bodies = Vec::new();
    for threads in ["1", "3"] {
        for cmd in [
            &[
                "eval",
                "--range",
                "400:420:0.05",
                "--scheme",
                "spira,acc-triangle,rs",
            ][..],
            &[
                "zeros",
                "--range",
                "400:420:0.01",
                "--scheme",
                "spira,afe,acc-coeff",
            ],
        ] {
            let csv = dir.path().join(format!("{}-{threads}.csv", cmd[0]));
            let mut args = cmd.to_vec();
            args.extend(["--threads", threads, "--out", path_arg(&csv)]);
            let out = zsections(&args);
            assert!(
                out.status.success(),
                "{}",
                String::from_utf8_lossy(&out.stderr)
            );
            bodies.push(std::fs::read(&csv).unwrap());
        }
    }
    assert_eq!(bodies[0], bodies[2]);
    assert_eq!(bodies[1], bodies[3]);
}

#[test]
fn zeros_report_statuses() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("zeros.csv");
    let out = zsections(&[
        "zeros",
        "--range",
        "412:419:0.01",
        "--scheme",
        "spira@205,afe@8",
        "--out",
        path_arg(&csv),
    ]);
    assert!(out.status.success());
    let mut reader = csv::Reader::from_path(&csv).unwrap();
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    let count = |scheme: &str, status: &str| {
        rows.iter()
            .filter(|r| &r[0] == scheme && &r[1] == status)
            .count()
    };
    assert_eq!(count("em", "reference"), 4);
    assert_eq!(count("spira@205", "matched"), 4);
    assert_eq!(count("afe@8", "missed"), 3);
    let json = summary(&csv);
    assert_eq!(json["summary"]["reference"], "em");
}

#[test]
fn coefficient_sweep() {
    let out = zsections(&["coeffs", "--n", "3,50"]);
    assert!(out.status.success());
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 4 + 51);
    let alpha: f64 = rows[1][2].parse().unwrap();
    assert_eq!(alpha, 11.0 / 16.0);
    let json: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    let l2 = json["summary"][0]["l2_distance"].as_f64().unwrap();
    assert!((l2 - 147f64.sqrt() / 16.0).abs() < 1e-15);
}

#[test]
fn short_conjecture_sweep_is_well_formed() {
    let out = zsections(&["conjecture", "--t", "30"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(json["summary"]["reference_zeros"], 0);
    assert_eq!(json["summary"]["clean"], true);
    let out = zsections(&["conjecture", "--t", "20000"]);
    assert_eq!(out.status.code(), Some(2));
}
