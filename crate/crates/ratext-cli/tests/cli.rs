//! End-to-end runs of the `ratext` binary.

use std::process::{Command, Output};

use ratext::exactpoly::ri;
use ratext::seedcat::{enumerate_seeds, RayIds};
use serde_json::Value;

fn ratext(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ratext")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = ratext(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn seeds_match_library() {
    let v = json(&["seeds", "--family", "dpt", "--lambda0", "2", "--mu0", "3", "--max-m", "3"]);
    let rows = v.as_array().unwrap();
    let lib = enumerate_seeds(&RayIds::dpt(ri(2), ri(3)), 3, false);
    assert_eq!(rows.len(), lib.len());
    for (row, (s, rep)) in rows.iter().zip(&lib) {
        assert_eq!(row["type"], s.stype.label());
        assert_eq!(row["m"], s.m);
        assert_eq!(row["pi"]["text"], s.pi.display_in("z").to_string());
        assert_eq!(row["usable"], rep.usable());
    }
}

#[test]
fn isotonic_first_exceptional_member() {
    let v = json(&["xop", "--family", "isotonic", "--lambda0", "5/2", "--type", "a", "--m", "1", "--level", "0"]);
    assert_eq!(v["monic"]["text"], "9/2 + zeta");
    assert_eq!(v["exceptional"]["matches_heine"], true);
}

#[test]
fn spectrum_claim_passes() {
    let v = json(&["verify", "spectrum", "--family", "dpt", "--lambda0", "2", "--mu0", "3", "--type", "a", "--m", "1"]);
    assert_eq!(v["claim"], "isospectrality");
    assert_eq!(v["pass"], true);
}

#[test]
fn residual_claim_passes() {
    let v = json(&["verify", "residual", "--family", "hpt", "--lambda0", "3/2", "--mu0", "13/2", "--type", "ta", "--m", "1"]);
    assert_eq!(v["pass"], true);
}

#[test]
fn census_single_point() {
    let v = json(&["census", "--lambda", "-3/2", "--mu", "5/2", "--m", "2"]);
    assert!(v.is_object());
}

#[test]
fn csv_has_header_and_rows() {
    let out = ratext(&["--format", "csv", "seeds", "--family", "isotonic", "--lambda0", "7/2", "--max-m", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().contains("type"));
    assert!(lines.count() >= 2);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(ratext(&["seeds", "--family", "dpt", "--lambda0", "2"]).status.code(), Some(2));
    assert_eq!(ratext(&["seeds", "--family", "dpt", "--lambda0", "x", "--mu0", "3"]).status.code(), Some(2));
    assert_eq!(ratext(&["bogus"]).status.code(), Some(2));
}

#[test]
fn failed_claim_exits_one() {
    let args = ["--tol", "1e-30", "verify", "orthogonality", "--family", "dpt", "--lambda0", "5/2", "--mu0", "7/2"];
    let out = ratext(&[&args[..], &["--type", "d", "--m", "2", "--target", "c"]].concat());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pass"], false);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn parallel_grid_is_deterministic() {
    let a = ratext(&["--jobs", "1", "census", "--grid", "--max-m", "2"]);
    let b = ratext(&["--jobs", "4", "census", "--grid", "--max-m", "2"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
