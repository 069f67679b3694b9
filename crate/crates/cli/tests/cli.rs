use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn hypbill(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypbill"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = hypbill(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn f(v: &Value) -> f64 {
    v.as_f64().unwrap()
}

#[test]
fn regular_hexagon_table() {
    let v = json(&["table", "regular", "--k", "3"]);
    assert!((f(&v["side_length"]) - 2f64.acosh()).abs() < 1e-13);
    assert_eq!(v["table"]["num_sides"], 6);
    assert_eq!(v["config"]["command"], "table");
    assert!(v["config"]["seed"].is_null());
    for a in v["table"]["angles"].as_array().unwrap() {
        assert!((f(a) - std::f64::consts::FRAC_PI_2).abs() < 1e-10);
    }
}

#[test]
fn symmetric_lambert_table() {
    let v = json(&["table", "lambert", "--k", "3", "--t", "0.658479"]);
    assert!((f(&v["a"]) - f(&v["b"])).abs() < 1e-6);
}

#[test]
fn malformed_flag_is_usage_error() {
    let out = hypbill(&["table", "regular", "--k", "3", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
    assert_eq!(
        hypbill(&["trajectory", "--k", "3", "--sequence", "1,1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(hypbill(&["render", "--k", "3"]).status.code(), Some(2));
}

#[test]
fn computation_error_is_machine_readable() {
    let out = hypbill(&["trajectory", "--k", "3", "--sequence", "1,2"]);
    assert_eq!(out.status.code(), Some(1));
    let e: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert!(e["error"]["kind"].is_string());
    assert!(e["error"]["message"].is_string());
    let out = hypbill(&["table", "from-sides", "--k", "3", "--sides", "1000,1,1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unique_lift_of_period_two() {
    let v = json(&["lift", "--k", "3", "--sequence", "1,4"]);
    assert_eq!(v["count"], 1);
    assert_eq!(v["stabilizer"], v["geometric_stabilizer"]);
    assert!((f(&v["per_lift_length"]) - 4.0 * f(&v["trajectory_length"])).abs() < 1e-9);
}

#[test]
fn lambert_lift_balances() {
    let v = json(&[
        "lift",
        "--k",
        "3",
        "--t",
        "0.6",
        "--sequence",
        "1,3,1,3,1,4,3,4",
    ]);
    assert!((f(&v["lhs"]) - f(&v["rhs"])).abs() < 1e-9);
}

#[test]
fn orbit_fills_hexagon() {
    let v = json(&["filling", "--k", "3", "--sequence", "1,4", "--orbit"]);
    assert_eq!(v["is_filling"], true);
    assert!((f(&v["total_area"]) - std::f64::consts::PI).abs() < 1e-6);
    let single = json(&["filling", "--k", "3", "--sequence", "1,4"]);
    assert_eq!(single["is_filling"], false);
}

#[test]
fn minimize_reaches_regular_hexagon() {
    let args = ["minimize", "--k", "3", "--sequence", "1,3,5"];
    let out1 = hypbill(&args);
    let out2 = hypbill(&args);
    assert!(out1.status.success());
    assert_eq!(out1.stdout, out2.stdout, "output is not deterministic");
    let v: Value = serde_json::from_slice(&out1.stdout).unwrap();
    assert!(f(&v["distance_to_regular"]) < 1e-4);
    assert_eq!(v["config"]["seed"], 0);
}

#[test]
fn minimize_lambert_reports_empty_range() {
    let out = hypbill(&["minimize-lambert", "--k", "3", "--sequence", "2,3,4"]);
    assert_eq!(out.status.code(), Some(1));
    let e: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(e["error"]["kind"], "empty_valid_range");
    let v = json(&[
        "minimize-lambert",
        "--k",
        "3",
        "--sequence",
        "1,3,1,3,1,4,3,4",
    ]);
    assert!((f(&v["t"]) - f(&v["symmetric_t"])).abs() < 1e-4);
}

#[test]
fn table_json_round_trips() {
    let path = tmp("octagon.json");
    let p = path.to_str().unwrap();
    let out = hypbill(&[
        "table",
        "from-sides",
        "--k",
        "4",
        "--sides",
        "1.5,1.6,1.45,1.55,1.52",
        "--json",
        p,
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let loaded = json(&["table", "load", "--input", p]);
    for key in ["vertices", "side_lengths", "angles"] {
        let a: Vec<f64> = flatten(&written["table"][key]);
        let b: Vec<f64> = flatten(&loaded["table"][key]);
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).abs() < 1e-12, "{key}: {x} vs {y}");
        }
    }
    assert!((f(&written["table"]["area"]) - f(&loaded["table"]["area"])).abs() < 1e-12);
}

fn flatten(v: &Value) -> Vec<f64> {
    match v {
        Value::Array(a) => a.iter().flat_map(flatten).collect(),
        other => vec![other.as_f64().unwrap()],
    }
}

#[test]
fn floats_have_at_most_fifteen_digits() {
    let out = hypbill(&["trajectory", "--k", "4", "--sequence", "1,4,7"]);
    let text = String::from_utf8(out.stdout).unwrap();
    for token in text.split(|c: char| !(c.is_ascii_digit() || c == '.' || c == 'e' || c == '-')) {
        if token.contains('.') {
            let mantissa = token.split('e').next().unwrap();
            let digits = mantissa
                .chars()
                .filter(|c| c.is_ascii_digit())
                .collect::<String>();
            assert!(digits.trim_start_matches('0').len() <= 15, "{token}");
        }
    }
}

#[test]
fn svg_figures() {
    let path = tmp("decagon.svg");
    let p = path.to_str().unwrap();
    let v = json(&["fn-coords", "--k", "5", "--svg", p]);
    assert_eq!(v["curve_count"], 9);
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg"));
    for color in ["#1f4fd1", "#d1321f", "#1a9c3a"] {
        assert!(svg.contains(color), "missing {color}");
    }
    let path = tmp("orbit.svg");
    let p = path.to_str().unwrap();
    let v = json(&[
        "render",
        "--k",
        "3",
        "--sequence",
        "1,4",
        "--sequence",
        "1,3,5",
        "--orbit",
        "--svg",
        p,
    ]);
    assert_eq!(v["trajectories"], 12);
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.matches("<path").count() >= 6 + 12 * 2);
}

#[test]
fn family_and_pair() {
    let v = json(&["family", "--k", "3", "--sequence", "1,3,5"]);
    assert_eq!(v["members"].as_array().unwrap().len(), 6);
    assert_eq!(v["distinct_count"], 2);
    let v = json(&[
        "family",
        "--k",
        "3",
        "--t",
        "0.658479",
        "--sequence",
        "1,3,1,3,1,4,3,4",
    ]);
    let (g, gb) = (
        f(&v["gamma"]["total_length"]),
        f(&v["gamma_bar"]["total_length"]),
    );
    assert!((g - gb).abs() < 1e-5);
}
