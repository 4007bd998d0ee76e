use serde_json::Value;
use std::process::{Command, Output};

fn cnext(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cnext")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = cnext(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn csv_metric(csv: &str, key: &str) -> String {
    let prefix = format!("# metric.{key}=");
    csv.lines().find_map(|l| l.strip_prefix(&prefix)).unwrap_or_else(|| panic!("no {key}")).to_string()
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        &["table1", "--no-header-timestamp"][..],
        &["extend1d", "--fn", "f5", "--shrink-delta", "1/40", "--a", "20", "--no-header-timestamp"],
        &["extend2d", "--curve", "star", "--fn", "sin-exp", "--n", "4", "--grid", "24x24", "--no-header-timestamp"],
        &["chunks", "--fn", "f3", "--format", "json", "--no-header-timestamp"],
    ] {
        assert_eq!(stdout(args), stdout(args), "{args:?}");
    }
    assert!(stdout(&["table1", "--n", "3", "--a", "2"]).contains("# generated_unix="));
}

#[test]
fn json_and_csv_carry_the_same_numbers() {
    let base = ["extend1d", "--fn", "f2", "--n", "9", "--no-header-timestamp"];
    let csv = stdout(&base);
    let mut json_args = base.to_vec();
    json_args.extend(["--format", "json"]);
    let json: Value = serde_json::from_str(&stdout(&json_args)).unwrap();
    for key in ["kappa", "condition_number", "spectrum_power"] {
        let c: f64 = csv_metric(&csv, key).parse().unwrap();
        assert_eq!(json["metrics"][key].as_f64().unwrap(), c, "{key}");
    }
    assert_eq!(json["metrics"]["chunks"].as_u64().unwrap().to_string(), csv_metric(&csv, "chunks"));
    let rows = json["tables"]["g_profile"]["rows"].as_array().unwrap();
    let first_csv_row = csv.lines().skip_while(|l| *l != "# table=g_profile").nth(2).unwrap();
    let cells: Vec<f64> = first_csv_row.split(',').map(|s| s.parse().unwrap()).collect();
    let cells_json: Vec<f64> = rows[0].as_array().unwrap().iter().map(|v| v.as_f64().unwrap()).collect();
    assert_eq!(cells, cells_json);
}

#[test]
fn table1_reproduces_published_entry() {
    let csv = stdout(&["table1", "--n", "9", "--a", "2", "--no-header-timestamp"]);
    let row = csv.lines().last().unwrap();
    let cond: f64 = row.split(',').nth(2).unwrap().parse().unwrap();
    assert_eq!(cond.round(), 70226.0);
}

#[test]
fn curve_from_sample_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ellipse.txt");
    let text: String = (0..128)
        .map(|j| {
            let t = std::f64::consts::TAU * j as f64 / 128.0;
            format!("{} {}\n", 1.5 * t.cos(), t.sin())
        })
        .collect();
    std::fs::write(&path, text).unwrap();
    let out_path = dir.path().join("out.json");
    let curve = format!("samples:{}", path.display());
    let _ = stdout(&[
        "extend2d", "--curve", &curve, "--fn", "x+2y", "--grid", "16x16", "--format", "json",
        "--out", out_path.to_str().unwrap(),
    ]);
    let json: Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert!(json["metrics"]["continuity_passes"].as_bool().unwrap());
    assert!(json["metrics"]["max_tube_error_vs_polynomial"].as_f64().unwrap() < 1e-8);
}

#[test]
fn exit_codes() {
    for bad in [
        &["extend1d", "--fn", "nope"][..],
        &["table1", "--n", "x..3"],
        &["extend2d", "--reach", "5", "--a", "4"],
        &["extend2d", "--reach", "0.45", "--a", "5"],
        &["extend1d", "--a", "4"],
        &["frobnicate"],
    ] {
        let out = cnext(bad);
        assert_eq!(out.status.code(), Some(2), "{bad:?}");
        assert!(!out.stderr.is_empty());
    }
    let reach = cnext(&["extend1d", "--a", "4"]);
    assert!(String::from_utf8_lossy(&reach.stderr).contains("a*M <= L"));
    let missing = cnext(&["extend2d", "--curve", "samples:/nonexistent/curve.txt"]);
    assert_ne!(missing.status.code(), Some(0));
    let unwritable = cnext(&["table1", "--out", "/nonexistent/dir/out.csv"]);
    assert_eq!(unwritable.status.code(), Some(1));
}
