use std::process::Command;

use serde_json::Value;
use su12_cli::main_with_args;
use su12_core::{Configuration, Mat2, TruncatedSeries};

fn run(args: &[&str]) -> (u8, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("su12").chain(args.iter().copied());
    let code = main_with_args(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn write_temp(dir: &tempfile::TempDir, name: &str, body: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn stability_examples() {
    let v = json(&[
        "stability",
        "--genus",
        "2",
        "--degree",
        "0",
        "--dbeta",
        "1",
        "--dgamma",
        "1",
    ]);
    assert_eq!(v["class"], "Stable");
    assert_eq!(v["inequalities"][0]["lhs"], 1);
    assert_eq!(v["inequalities"][0]["rhs"], 2);
    let v = json(&[
        "stability",
        "--genus",
        "2",
        "--degree",
        "0",
        "--dbeta",
        "2",
        "--dgamma",
        "2",
    ]);
    assert_eq!(v["class"], "StrictlyPolystable");
    let (code, out, err) = run(&[
        "stability",
        "--genus",
        "2",
        "--degree",
        "5",
        "--dbeta",
        "1",
        "--dgamma",
        "1",
    ]);
    assert_eq!(code, 0);
    assert!(err.contains("warning"));
    assert!(out.contains("\"Unstable\""));
    let v = json(&[
        "stability",
        "--genus",
        "3",
        "--degree",
        "-1",
        "--dbeta",
        "0",
        "--dgamma",
        "1",
    ]);
    assert_eq!(v["class"], "Stable");
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["stability", "--dbeta", "3", "--dgamma", "3"][..],
        &["stability", "--genus", "1", "--dbeta", "0", "--dgamma", "0"],
        &["stability", "--dbeta", "1"],
        &["census", "--format", "xml"],
        &["local-model-verify", "--truncation", "1"],
        &["git-classify", "--input", "/nonexistent/configs.json"],
        &["nonsense"],
    ] {
        assert_eq!(run(args).0, 1, "{args:?}");
    }
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn census_totals() {
    let v = json(&["census", "--genus", "2", "--degree", "0"]);
    let total = |class: &str| {
        v["totals"]
            .as_array()
            .unwrap()
            .iter()
            .find(|t| t["class"] == class)
            .unwrap()["labeled_count"]
            .clone()
    };
    assert_eq!(total("Stable"), "21");
    assert_eq!(total("StrictlyPolystable"), "6");
    assert_eq!(v["grand_total"], "81");

    let (code, out, err) = run(&["census", "--genus", "2", "--degree", "1", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(err.contains("warning"));
    assert!(out.lines().any(|l| l == "total,,,Stable,0,"));
    assert!(out.lines().any(|l| l == "total,,,all,81,"));

    let v = json(&["census", "--genus", "3", "--degree", "1"]);
    assert_eq!(v["grand_total"], "6561");
}

const CONFIGS: &str = r#"[
  {"base": "L0", "points": ["zero", {"t": "1"}, {"t": "2"}, "inf"]},
  {"base": "L0", "points": ["zero", "zero", {"t": "3/2"}, {"t": "-1+1*sqrt2"}]},
  {"base": "L0", "points": ["zero", "zero", "zero", {"t": "1"}]}
]"#;

#[test]
fn git_classify_examples() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_temp(&dir, "c.json", CONFIGS);
    let v = json(&["git-classify", "--input", &input]);
    let rows = v.as_array().unwrap();
    let classes: Vec<_> = rows.iter().map(|r| r["closed_form"].as_str().unwrap()).collect();
    assert_eq!(classes, ["GitStable", "StrictlySemistable", "GitUnstable"]);
    assert!(rows.iter().all(|r| r["agree"] == true));
    assert_eq!(
        rows[1]["representative"]["points"],
        serde_json::json!(["zero", "zero", "inf", "inf"])
    );
    assert!(rows[2]["representative"].is_null());
}

#[test]
fn git_classify_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_temp(&dir, "c.json", CONFIGS);
    let v = json(&["git-classify", "--input", &input]);
    let echoed: Vec<Configuration> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| serde_json::from_value(r["configuration"].clone()).unwrap())
        .collect();
    let original: Vec<Configuration> = serde_json::from_str(CONFIGS).unwrap();
    assert_eq!(echoed, original);
    let reps: Vec<Configuration> = v
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| !r["representative"].is_null())
        .map(|r| serde_json::from_value(r["representative"].clone()).unwrap())
        .collect();
    let again = write_temp(&dir, "reps.json", &serde_json::to_string(&reps).unwrap());
    let v = json(&["git-classify", "--input", &again]);
    assert_eq!(v.as_array().unwrap().len(), 2);
}

#[test]
fn git_classify_edge_inputs() {
    let dir = tempfile::tempdir().unwrap();
    for body in ["", "[]"] {
        let path = write_temp(&dir, "e.json", body);
        let (code, out, _) = run(&["git-classify", "--input", &path]);
        assert_eq!((code, out.trim()), (0, "[]"));
    }
    let short = write_temp(&dir, "s.json", r#"[{"base": "L0", "points": ["zero"]}]"#);
    assert_eq!(run(&["git-classify", "--input", &short]).0, 1);
    let garbage = write_temp(&dir, "g.json", "{not json");
    assert_eq!(run(&["git-classify", "--input", &garbage]).0, 1);
    let input = write_temp(&dir, "c.json", CONFIGS);
    let (code, _, err) = run(&["git-classify", "--input", &input, "--degree", "1"]);
    assert_eq!(code, 1, "{err}");
}

#[test]
fn local_verify_passes() {
    let v = json(&[
        "local-model-verify",
        "--truncation",
        "8",
        "--seed",
        "3",
        "--cases",
        "200",
    ]);
    assert_eq!(v["all_passed"], true);
    assert_eq!(v["suites"][0]["passed"], 200);
    let v = json(&["local-model-verify", "--truncation", "2", "--cases", "40"]);
    assert_eq!(v["all_passed"], true);
}

#[test]
fn local_verify_reports_corrupted_input() {
    let dir = tempfile::tempdir().unwrap();
    let z = TruncatedSeries::zeta(8);
    let bad = vec![Mat2::diag(&z * &z, TruncatedSeries::one(8))];
    let path = write_temp(&dir, "m.json", &serde_json::to_string(&bad).unwrap());
    let (code, out, _) = run(&["local-model-verify", "--cases", "5", "--input", &path]);
    assert_eq!(code, 2);
    let v: Value = serde_json::from_str(&out).unwrap();
    let suite = v["suites"]
        .as_array()
        .unwrap()
        .iter()
        .find(|s| s["name"] == "smith_input")
        .unwrap();
    assert!(suite["failures"][0]["message"]
        .as_str()
        .unwrap()
        .contains("det(phi)"));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "local-model-verify",
        "--truncation",
        "5",
        "--seed",
        "42",
        "--cases",
        "30",
        "--format",
        "json",
    ];
    assert_eq!(run(&args).1, run(&args).1);
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.csv");
    let out = out.to_str().unwrap();
    let (code, stdout, _) = run(&["census", "--format", "csv", "--output", out]);
    assert_eq!((code, stdout.as_str()), (0, ""));
    assert_eq!(
        std::fs::read_to_string(out).unwrap(),
        run(&["census", "--format", "csv"]).1
    );
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_su12");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["stability", "--dbeta", "1", "--dgamma", "1"]), Some(0));
    assert_eq!(status(&["stability"]), Some(1));
    let dir = tempfile::tempdir().unwrap();
    let z = TruncatedSeries::zeta(4);
    let bad = vec![Mat2::diag(&z * &z, TruncatedSeries::one(4))];
    let path = write_temp(&dir, "m.json", &serde_json::to_string(&bad).unwrap());
    assert_eq!(
        status(&[
            "local-model-verify",
            "--truncation",
            "4",
            "--cases",
            "2",
            "--input",
            &path
        ]),
        Some(2)
    );
}
