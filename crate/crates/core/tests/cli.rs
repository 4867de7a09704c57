use std::process::Command;

use proportionals::cli::run;
use serde_json::Value;

fn run_args(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("proportionals").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json_of(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.push("--json");
    let (code, out, err) = run_args(&full);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn binary() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_proportionals"));
    cmd.env_remove("PROPORTIONALS_DIGITS");
    cmd
}

#[test]
fn chord_text_block() {
    let (code, out, _) = run_args(&["solve-chords", "--diameter", "2", "--digits", "10"]);
    assert_eq!(code, 0);
    let line = |label: &str| {
        out.lines()
            .find(|l| l.trim_start().starts_with(label))
            .unwrap()
            .to_string()
    };
    assert!(line("AB").contains("63534 43923"));
    assert!(line("BC").contains("93114 24637"));
    assert!(line("BD").contains("1 36465 56077"));
}

#[test]
fn text_and_json_agree() {
    let (_, text, _) = run_args(&["solve-chords", "--digits", "10"]);
    let json = json_of(&["solve-chords", "--digits", "10"]);
    for key in ["ab", "bc", "bd", "ad"] {
        assert!(text.contains(json[key].as_str().unwrap()), "{key}");
        assert!(text.contains(json["as_computed"][key].as_str().unwrap()), "{key}");
    }

    let (_, text, _) = run_args(&["means", "--a", "1", "--b", "2", "--digits", "12"]);
    let json = json_of(&["means", "--a", "1", "--b", "2", "--digits", "12"]);
    for key in ["m1", "m2"] {
        assert!(text.contains(json[key].as_str().unwrap()));
    }
}

#[test]
fn means_json_fields() {
    let v = json_of(&["means", "--a", "1", "--b", "2", "--digits", "10"]);
    assert_eq!(v["m1"], "1.2599210499");
    assert_eq!(v["m2"], "1.5874010520");
    assert_eq!(v["method"], "instrument");
    let c = json_of(&["means", "--a", "1", "--b", "2", "--digits", "10", "--method", "compass"]);
    assert_eq!(c["theta_param"], v["theta_param"]);
}

#[test]
fn table_json_carries_printed_and_computed() {
    let (code, out, _) = run_args(&["verify-table", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 10);
    let cbd = rows.iter().find(|r| r["label"] == "CBD").unwrap();
    assert_eq!(cbd["as_printed"], "1 17068 87846 55798 69049");
    assert_eq!(cbd["as_computed"], "1 27068 87846 55798 69049");
    assert_eq!(cbd["matches_printed"], false);
    assert!(cbd["annotation"].as_str().unwrap().starts_with("misprint"));
    assert_eq!(v["misprints"], 3);
}

#[test]
fn pyramid_and_oblique() {
    let v = json_of(&["pyramid", "--edges", "3", "4", "12"]);
    assert_eq!(v["diagonal_sq"], "169");
    assert_eq!(v["sphere_diameter_sq"], "169");
    assert_eq!(v["verified"], true);
    let v = json_of(&["pyramid", "--edges", "1", "1", "1", "--cosines", "1/2", "1/2", "1/2"]);
    assert_eq!(v["diagonal_sq"], "6");
    let (code, _, err) = run_args(&["pyramid", "--edges", "1", "1", "1", "--cosines", "1", "1", "-1"]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn four_proportionals_and_cube() {
    let v = json_of(&["four-proportionals", "--ac", "2", "--t", "1/2", "--sphere"]);
    let exact: Vec<&str> = v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["exact"].as_str().unwrap())
        .collect();
    assert_eq!(exact, ["54/125", "18/25", "6/5", "2"]);
    assert_eq!(v["perpendicularity_residual"], "0");
    let (code, _, _) = run_args(&["four-proportionals", "--t", "1"]);
    assert_eq!(code, 2);
    let v = json_of(&["duplicate-cube", "--edge", "1", "--digits", "10"]);
    assert_eq!(v["doubled_edge"], "1.2599210499");
}

#[test]
fn check_props_reports_seed() {
    let (code, out, _) = run_args(&["check-props", "--seed", "42", "--instances", "60"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("seed 42"));
    assert!(out.contains("all propositions hold"));
}

#[test]
fn exit_codes() {
    assert_eq!(run_args(&["frobnicate"]).0, 2);
    assert_eq!(run_args(&["means", "--a", "1", "--b", "2", "--bogus"]).0, 2);
    assert_eq!(run_args(&["means", "--a", "x", "--b", "2"]).0, 2);
    assert_eq!(run_args(&["solve-chords", "--diameter", "-1"]).0, 2);
    assert_eq!(run_args(&["solve-chords", "--digits", "0"]).0, 2);
    assert_eq!(run_args(&["--version"]).0, 0);
    let (code, _, err) = run_args(&[]);
    assert_eq!(code, 2);
    assert!(err.contains("Usage"));

    let out = binary().args(["means", "--a", "2", "--b", "1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("domain error"));
    let out = binary().args(["verify-table"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn environment_sets_default_digits_and_flag_wins() {
    let out = binary()
        .args(["means", "--a", "1", "--b", "2", "--json"])
        .env("PROPORTIONALS_DIGITS", "8")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["m1"], "1.25992105");
    let out = binary()
        .args(["means", "--a", "1", "--b", "2", "--json", "--digits", "10"])
        .env("PROPORTIONALS_DIGITS", "8")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["m1"], "1.2599210499");
}

#[test]
fn figure_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig4.svg");
    let p = path.to_str().unwrap();
    let (code, out, _) = run_args(&["figure", "--id", "4", "--out", p]);
    assert_eq!(code, 0);
    assert!(out.contains("fig4.svg"));
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.contains(r#"data-world-x="0.6353443923""#));
    let (_, stdout_svg, _) = run_args(&["figure", "--id", "4"]);
    assert_eq!(svg, stdout_svg);
    assert_eq!(run_args(&["figure", "--id", "12"]).0, 2);
}
