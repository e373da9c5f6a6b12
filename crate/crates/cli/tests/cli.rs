//! End-to-end checks of the command line: exit codes, JSON round
//! trips, and byte-for-byte determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cuspidal"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn zeta_poly_reproduces_the_unit_special_value() {
    let out = run(&["zeta", "--ring", "poly q=2", "--r", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("(1-q^r)*zeta_A(1-r) = 1"), "{text}");
}

#[test]
fn zeta_shifted_normalized_form() {
    let out = run(&["zeta", "--ring", "shifted q=2 g=T^2+T+1"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("(1 + S)/(1 - 2*S)"), "{text}");
}

#[test]
fn zeta_elliptic_class_shapes() {
    let out = run(&["zeta", "--ring", "elliptic q=2 a=[0,0,1,0,0]"]);
    let text = String::from_utf8(out.stdout).unwrap();
    // Z_(A) = 1 + 2S^2/(1-2S) = (1 - 2S + 2S^2)/(1 - 2S)
    assert!(text.contains("(1 - 2*S + 2*S^2)/(1 - 2*S)"), "{text}");
}

#[test]
fn orders_elliptic_three_cusps() {
    let out = run(&[
        "orders",
        "--ring",
        "elliptic q=2 a=[0,0,1,0,0]",
        "--ideal",
        "(0,0)",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let orders: Vec<&str> = v["result"]["orders"]
        .as_array()
        .unwrap()
        .iter()
        .map(|o| o["order_u"].as_str().unwrap())
        .collect();
    assert_eq!(orders, vec!["6", "1", "2"]);
}

#[test]
fn division_form_mode() {
    let out = run(&[
        "orders",
        "--ring",
        "poly q=2",
        "--ideal",
        "T",
        "--u1",
        "1/T",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["division_form"]["ord_tn_E1u"], "1");
}

#[test]
fn matrix_command_emits_det_and_match() {
    let out = run(&[
        "matrix",
        "--ring",
        "poly q=2",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["det"], "1");
    assert_eq!(v["result"]["frobenius_crosscheck"]["match"], true);
}

#[test]
fn mmatrix_mode_passes() {
    let out = run(&[
        "matrix",
        "--ring",
        "shifted q=2 g=T^2+T+1",
        "--mmatrix",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("strictly upper triangular mod pi_inf: PASS"), "{text}");
}

#[test]
fn expand_reports_equal_routes() {
    let out = run(&["expand", "--ring", "poly q=2", "--prec", "9"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("EQUAL"), "{text}");
}

#[test]
fn json_round_trip_is_identity() {
    for args in [
        vec!["zeta", "--ring", "elliptic q=2 a=[0,0,1,0,0]", "--format", "json"],
        vec!["orders", "--ring", "poly q=3", "--ideal", "T", "--format", "json"],
        vec!["matrix", "--ring", "shifted q=2 g=T^2+T+1", "--format", "json"],
    ] {
        let out = run(&args);
        assert!(out.status.success());
        let text = String::from_utf8(out.stdout).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["schema_version"], 1);
        let re = serde_json::to_string_pretty(&v).unwrap();
        assert_eq!(text.trim_end(), re, "round trip changed bytes");
    }
}

#[test]
fn output_is_deterministic() {
    for format in ["table", "json", "csv"] {
        let a = run(&[
            "zeta",
            "--ring",
            "elliptic q=3 a=[0,0,0,2,1]",
            "--format",
            format,
        ]);
        let b = run(&[
            "zeta",
            "--ring",
            "elliptic q=3 a=[0,0,0,2,1]",
            "--format",
            format,
        ]);
        assert_eq!(a.stdout, b.stdout, "format {format}");
    }
}

#[test]
fn exit_codes_follow_the_contract() {
    // parameter error: 2
    let out = run(&["zeta", "--ring", "poly q=6"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["zeta", "--ring", "poly q=2 bogus=1"]);
    assert_eq!(out.status.code(), Some(2));
    // singular curve: parameter error
    let out = run(&["zeta", "--ring", "elliptic q=2 a=[0,0,0,0,0]"]);
    assert_eq!(out.status.code(), Some(2));
    // precision/certification failure: 4 (degree bound too small for
    // the requested precision)
    let out = run(&[
        "matrix",
        "--ring",
        "poly q=2",
        "--mmatrix",
        "--prec",
        "8",
        "--level",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn csv_output_has_header() {
    let out = run(&["zeta", "--ring", "poly q=2", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("key,value"));
}
