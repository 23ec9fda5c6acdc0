use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn fracroot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fracroot"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn temp_file(content: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(content.as_bytes()).unwrap();
    f
}

#[test]
fn solve_sqrt2() {
    let out = fracroot(&["solve", "--coeffs", "-2,0,1", "--alpha", "1", "--x0", "1.5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("alpha,re_root,im_root,residual,iterations,termination")
    );
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    let root: f64 = row[1].parse().unwrap();
    assert!((root - std::f64::consts::SQRT_2).abs() < 1e-12);
    assert_eq!(row[5], "Converged");
}

#[test]
fn alpha_zero_is_rejected() {
    let out = fracroot(&["solve", "--coeffs", "-2,0,1", "--alpha", "0", "--x0", "1.5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("(0, 2)"), "{err}");
}

#[test]
fn validation_exit_codes() {
    // No polynomial source, two sources, bad numbers, bad sweep grid.
    for args in [
        vec!["solve", "--alpha", "1", "--x0", "1"],
        vec![
            "solve",
            "--coeffs",
            "1,1",
            "--poly-file",
            "p.txt",
            "--alpha",
            "1",
            "--x0",
            "1",
        ],
        vec!["solve", "--coeffs", "1,x", "--alpha", "1", "--x0", "1"],
        vec!["solve", "--coeffs", "1,1", "--alpha", "1"],
        vec!["solve", "--coeffs", "1,1", "--alpha", "2", "--x0", "1"],
        vec!["solve", "--coeffs", "1,0", "--alpha", "1", "--x0", "1"],
        vec!["sweep", "--coeffs", "1,1", "--x0", "1", "--alpha-step", "0"],
        vec!["sweep", "--coeffs", "1,1", "--x0", "1", "--tol-res", "-1"],
        vec![
            "solve",
            "--coeffs",
            "1,1",
            "--alpha",
            "1",
            "--x0",
            "1",
            "--aitken-guard",
            "maybe",
        ],
        vec!["bogus", "--coeffs", "1,1"],
    ] {
        let out = fracroot(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn missing_file_is_io_error() {
    let out = fracroot(&["oracle", "--poly-file", "/definitely/not/here.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_exits_zero() {
    assert!(fracroot(&["--help"]).status.success());
}

#[test]
fn poly_file_formats() {
    let plain = temp_file("# x^2 - 2\n-2\n0\n1\n");
    let json = temp_file("{\"coeffs\": [-2, 0, 1]}");
    let a = fracroot(&[
        "solve",
        "--poly-file",
        plain.path().to_str().unwrap(),
        "--alpha",
        "1",
        "--x0",
        "1.5",
    ]);
    let b = fracroot(&[
        "solve",
        "--poly-file",
        json.path().to_str().unwrap(),
        "--alpha",
        "1",
        "--x0",
        "1.5",
    ]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);

    let degenerate = temp_file("1\n0\n0\n");
    let out = fracroot(&["oracle", "--poly-file", degenerate.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));

    let bad = temp_file("1\n0\nabc\n");
    let out = fracroot(&["oracle", "--poly-file", bad.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("line 3"));
}

fn bits(v: &Value) -> u64 {
    v.as_f64().unwrap().to_bits()
}

#[test]
fn json_round_trip_is_bit_exact() {
    let args = ["--coeffs", "-2,0,1", "--alpha", "0.9", "--x0", "1.5"];
    let csv = stdout(&fracroot(&[&["solve"], &args[..]].concat()));
    let json = stdout(&fracroot(
        &[&["solve"], &args[..], &["--format", "json"]].concat(),
    ));
    let doc: Value = serde_json::from_str(&json).unwrap();
    let row: Vec<&str> = csv.lines().nth(1).unwrap().split(',').collect();
    let result = &doc["result"];
    for (field, col) in [
        ("alpha", 0),
        ("re_root", 1),
        ("im_root", 2),
        ("residual", 3),
    ] {
        let from_csv: f64 = row[col].parse().unwrap();
        assert_eq!(bits(&result[field]), from_csv.to_bits(), "{field}");
    }

    // Re-serialising the parsed values reproduces the document.
    let again = serde_json::to_string_pretty(&doc).unwrap() + "\n";
    assert_eq!(again, json);
}

#[test]
fn sweep_json_mirrors_csv() {
    let args = [
        "sweep",
        "--coeffs",
        "1,0,1",
        "--x0",
        "1,0.5",
        "--alpha-min",
        "0.9",
        "--alpha-max",
        "1.1",
        "--alpha-step",
        "0.01",
    ];
    let csv = stdout(&fracroot(&args));
    let doc: Value = serde_json::from_str(&stdout(&fracroot(
        &[&args[..], &["--format", "json"]].concat(),
    )))
    .unwrap();
    let blocks: Vec<&str> = csv.split("\n\n").collect();
    assert_eq!(blocks.len(), 3);
    let records: Vec<&str> = blocks[0].lines().skip(1).collect();
    assert_eq!(records.len(), doc["records"].as_array().unwrap().len());
    for (line, rec) in records.iter().zip(doc["records"].as_array().unwrap()) {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(
            cols[1].parse::<f64>().unwrap().to_bits(),
            bits(&rec["re_root"])
        );
        assert_eq!(cols[4], rec["iterations"].to_string());
    }
    assert!(blocks[1].starts_with("re_root,im_root,discoveries,best_residual"));
}

#[test]
fn dtable_grid() {
    let out = fracroot(&[
        "dtable", "--coeffs", "0,1", "--alphas", "0.5,1", "--points", "4,0",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "alpha,z,re_value,im_value,error");
    assert_eq!(lines.len(), 5);
    // Rows are sorted by alpha then z; z = 0 is singular for alpha = 1/2.
    assert!(lines[1].ends_with("singular at z = 0"), "{}", lines[1]);
    let cols: Vec<&str> = lines[2].split(',').collect();
    let v: f64 = cols[2].parse().unwrap();
    assert!((v - 4.0 / std::f64::consts::PI.sqrt()).abs() < 1e-12);
}

#[test]
fn oracle_output() {
    let out = fracroot(&["oracle", "--coeffs", "-6,11,-6,1", "--format", "json"]);
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["converged"], Value::Bool(true));
    let roots: Vec<f64> = doc["roots"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["re_root"].as_f64().unwrap())
        .collect();
    for (got, want) in roots.iter().zip([1.0, 2.0, 3.0]) {
        assert!((got - want).abs() < 1e-10);
    }
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        vec![
            "solve", "--coeffs", "1,0,1", "--alpha", "0.9", "--x0", "1", "--trace",
        ],
        vec![
            "sweep",
            "--coeffs",
            "1,0,1",
            "--x0",
            "1",
            "--alpha-step",
            "0.01",
            "--format",
            "json",
        ],
        vec!["dtable", "--coeffs", "1,2,3"],
        vec!["oracle", "--coeffs", "1,2,3,4"],
    ] {
        let a = fracroot(&args);
        let b = fracroot(&args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
