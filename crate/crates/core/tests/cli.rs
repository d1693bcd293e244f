//! End-to-end tests of the `asincert` binary: exit codes, output formats,
//! and the round-trip properties of the serialized artifacts.

mod common;

use asincert::replay_json;
use asincert::verifier::Certificate;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_asincert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn b1() -> f64 {
    2.0 / (std::f64::consts::PI - 2.0)
}

#[test]
fn verify_exit_codes_follow_verdicts() {
    assert_eq!(code(&run(&["verify", "--b", "2", "--relation", "le"])), 0);
    assert_eq!(code(&run(&["verify", "--b", "1.8", "--relation", "ge"])), 1);
    assert_eq!(
        code(&run(&[
            "verify",
            "--a",
            "3.141592653589793",
            "--b",
            "2",
            "--relation",
            "ge"
        ])),
        0
    );
}

#[test]
fn verify_emits_a_replayable_certificate() {
    let out = run(&[
        "verify",
        "--b",
        "2",
        "--relation",
        "le",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let json = stdout(&out);
    replay_json(&json).expect("replay accepts the emitted certificate");
    let cert: Certificate = serde_json::from_str(&json).unwrap();
    assert_eq!(serde_json::from_str::<Certificate>(&cert.to_json()).unwrap(), cert);
}

#[test]
fn refuted_certificate_carries_a_witness() {
    let out = run(&[
        "verify",
        "--b",
        "1.8",
        "--relation",
        "ge",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 1);
    let cert: Certificate = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(cert
        .nodes
        .iter()
        .any(|n| n.lo == n.hi && n.enclosure_hi < 0.0));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(code(&run(&["verify", "--relation", "ge"])), 64);
    assert_eq!(code(&run(&["verify", "--b", "0", "--relation", "ge"])), 64);
    assert_eq!(code(&run(&["find-bounds", "--tol", "1e-15"])), 64);
    assert_eq!(code(&run(&["gap-table", "--b", "2", "--n", "1"])), 64);
    assert_eq!(code(&run(&["classify", "--b", "-3"])), 64);
    assert_eq!(code(&run(&["verify", "--b", "2", "--relation", "le", "--precision", "0"])), 64);
    assert_eq!(code(&run(&["nonsense"])), 64);
}

#[test]
fn find_bounds_reports_both_parameters() {
    let out = run(&["find-bounds", "--tol", "1e-6", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let b1_found = v["b1"].as_f64().unwrap();
    let b2_found = v["b2"].as_f64().unwrap();
    assert!((b1_found - b1()).abs() <= 1e-6);
    assert!((b2_found - 2.0).abs() <= 1e-6);
    assert!(v["agreement"].as_f64().unwrap() <= 1e-6);
}

#[test]
fn find_bounds_then_verify_round_trip() {
    let out = run(&["find-bounds", "--tol", "1e-9", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let b1_found = v["b1"].as_f64().unwrap();
    // the reported parameter itself must verify...
    let ok = run(&["verify", "--b", &format!("{b1_found:.17e}"), "--relation", "ge"]);
    assert_eq!(code(&ok), 0);
    // ...and a parameter beyond the boundary must refute
    let beyond = b1_found + 1e-3;
    let bad = run(&["verify", "--b", &format!("{beyond:.17e}"), "--relation", "ge"]);
    assert_eq!(code(&bad), 1);
}

#[test]
fn gap_table_header_and_endpoint_row() {
    let out = run(&[
        "gap-table",
        "--b",
        "1.7519383938841089",
        "--n",
        "5",
        "--format",
        "csv",
        "--precision",
        "17",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "x,f_b,asin,gap");
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 5);
    let last: Vec<f64> = rows[4].split(',').map(|s| s.parse().unwrap()).collect();
    assert_eq!(last[0], 1.0);
    assert!(last[3].abs() <= 1e-10, "endpoint gap {}", last[3]);
    let first: Vec<f64> = rows[0].split(',').map(|s| s.parse().unwrap()).collect();
    assert_eq!(first[3], 0.0);
}

#[test]
fn gap_table_is_one_signed_at_b_two() {
    let out = run(&["gap-table", "--b", "2", "--n", "11", "--format", "csv"]);
    let text = stdout(&out);
    for line in text.lines().skip(1) {
        let gap: f64 = line.split(',').nth(3).unwrap().parse().unwrap();
        assert!(gap <= 0.0, "row {line}");
    }
}

#[test]
fn csv_round_trips_at_the_configured_precision() {
    for precision in ["6", "12", "17"] {
        let out = run(&[
            "gap-table",
            "--b",
            "1.7",
            "--n",
            "9",
            "--format",
            "csv",
            "--precision",
            precision,
        ]);
        let text = stdout(&out);
        let p: i32 = precision.parse().unwrap();
        for line in text.lines().skip(1) {
            for field in line.split(',') {
                let v: f64 = field.parse().expect("csv fields parse as floats");
                // re-rendering at the same precision is lossless
                let rendered = asincert::cli::format_float(v, p as usize);
                let back: f64 = rendered.parse().unwrap();
                assert!(
                    (back - v).abs() <= 10f64.powi(1 - p) * v.abs(),
                    "{field} vs {rendered} at precision {p}"
                );
            }
        }
    }
}

#[test]
fn classify_reports_regime_and_witnesses() {
    let out = run(&["classify", "--b", "2", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["regime"], "DERIVATIVE_NONPOSITIVE");
    assert_eq!(v["critical_point"].as_f64().unwrap(), 0.0);

    let out = run(&["classify", "--b", "1.9", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["regime"], "CROSSING");

    // the closed form 2/(pi-2) itself: hump regime, stationary point near 0.948
    let out = run(&["classify", "--b", "1.7519383938841089", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["regime"], "HUMP");
    assert!((v["critical_point"].as_f64().unwrap() - 0.94831).abs() <= 1e-5);
}

#[test]
fn format_never_alters_the_verdict() {
    for format in ["json", "csv", "human"] {
        assert_eq!(
            code(&run(&["verify", "--b", "2", "--relation", "le", "--format", format])),
            0
        );
        assert_eq!(
            code(&run(&["verify", "--b", "1.8", "--relation", "ge", "--format", format])),
            1
        );
    }
}

#[test]
fn out_flag_writes_the_file() {
    let dir = std::env::temp_dir().join("asincert-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cert.json");
    let out = run(&[
        "verify",
        "--b",
        "2",
        "--relation",
        "le",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let json = std::fs::read_to_string(&path).unwrap();
    replay_json(&json).unwrap();
    std::fs::remove_file(&path).ok();
}

#[test]
fn custom_domain_and_equality_flags() {
    // interior subdomain, no equality points: strictly positive gap proves >=
    let out = run(&[
        "verify",
        "--b",
        "1.7519383938841089",
        "--relation",
        "ge",
        "--domain",
        "0.25,0.75",
        "--equality",
        "none",
    ]);
    assert_eq!(code(&out), 0);
    // explicit equality list
    let out = run(&[
        "verify",
        "--b",
        "2",
        "--relation",
        "le",
        "--equality",
        "0",
    ]);
    assert_eq!(code(&out), 0);
}
