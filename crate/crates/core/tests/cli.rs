use std::path::PathBuf;
use std::process::Command;

use principal_parts::cli::{emit_json, parse_report_json, run, ClassOutput, Outcome};
use principal_parts::jetcalc::{prove_non_isomorphic, verify_ktheory_equality};
use principal_parts::report::{Report, Value};

fn run_args(args: &[&str]) -> Outcome {
    run(std::iter::once("pparts").chain(args.iter().copied()))
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

/// Re-reads the text rendering of a report into `(step, key, value)` triples.
fn text_values(text: &str) -> Vec<(usize, String, String)> {
    let mut out = Vec::new();
    let mut step = 0;
    for line in text.lines() {
        let trimmed = line.trim_start();
        if trimmed.starts_with('[') && line.starts_with("  [") {
            step += 1;
        } else if let Some((k, v)) = trimmed.split_once(" = ") {
            out.push((step, k.to_owned(), v.to_owned()));
        }
    }
    out
}

fn json_values(report: &Report) -> Vec<(usize, String, String)> {
    let mut out = Vec::new();
    for (i, s) in report.steps.iter().enumerate() {
        for (k, v) in &s.values {
            out.push((i + 1, k.clone(), v.to_string()));
        }
    }
    out
}

#[test]
fn mainsplit_text_and_json_match_golden_files() {
    let text = run_args(&["verify", "mainsplit", "-N", "3", "-l", "2"]);
    let json = run_args(&["--json", "verify", "mainsplit", "-N", "3", "-l", "2"]);
    assert_eq!(text.exit_code, 0);
    assert_eq!(json.exit_code, 0);
    assert_eq!(text.stdout, golden("mainsplit_N3_l2.txt"));
    assert_eq!(json.stdout, golden("mainsplit_N3_l2.json"));
    let report = parse_report_json(&json.stdout).unwrap();
    assert_eq!(text_values(&text.stdout), json_values(&report));
}

#[test]
fn text_and_json_agree_for_every_claim() {
    for args in [
        vec!["verify", "mainsplit", "-N", "2", "-l", "0"],
        vec!["verify", "mainsplit", "-N", "2", "-l", "-1"],
        vec!["verify", "ktheory", "-N", "4", "-k", "3", "-l", "7"],
        vec!["verify", "atiyah", "-l", "-3"],
    ] {
        let text = run_args(&args);
        let mut with_json = vec!["--json"];
        with_json.extend(&args);
        let json = run_args(&with_json);
        assert_eq!(text.exit_code, json.exit_code);
        let report = parse_report_json(&json.stdout).unwrap();
        assert_eq!(text_values(&text.stdout), json_values(&report), "{args:?}");
        assert!(text.stdout.contains(&format!("verdict: {}", report.verdict)));
    }
}

#[test]
fn refuted_report_maps_to_exit_one() {
    let o = run_args(&["--json", "verify", "mainsplit", "-N", "2", "-l", "0"]);
    assert_eq!(o.exit_code, 1);
    let r = parse_report_json(&o.stdout).unwrap();
    assert_eq!(serde_json::to_value(r.verdict).unwrap(), "refuted");
}

#[test]
fn reports_round_trip_through_json() {
    let reports = vec![
        prove_non_isomorphic(3, 2),
        prove_non_isomorphic(5, 0),
        verify_ktheory_equality(6, 6, -10).unwrap(),
        principal_parts::p1lab::verify_corr_p1(7),
    ];
    for r in reports {
        let text = emit_json(&r);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        for key in ["claim", "params", "verdict", "steps"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(parse_report_json(&text).unwrap(), r);
    }
}

#[test]
fn wide_integers_survive_serialization() {
    let r = verify_ktheory_equality(35, 35, 0).unwrap();
    let json = emit_json(&r);
    assert!(json.contains("\"112186277816662845432\""));
    let back = parse_report_json(&json).unwrap();
    let left = back.step("left:").unwrap();
    assert_eq!(left.values["multiplicity"], Value::from("112186277816662845432"));
    assert_eq!(back, r);

    let o = run_args(&["--json", "kclass", "-N", "35", "O(35)"]);
    let out: ClassOutput = serde_json::from_str(&o.stdout).unwrap();
    // coefficient of t^35 in [O(35)] is C(69, 35)
    assert_eq!(out.coefficients[35], "56093138908331422716");
    let text = run_args(&["kclass", "-N", "35", "O(35)"]);
    assert!(text.stdout.contains("56093138908331422716t^35"));
}

#[test]
fn birkhoff_reads_a_matrix_file_through_the_binary() {
    let dir = std::env::temp_dir().join(format!("pparts-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("jet.txt");
    std::fs::write(&path, "u^3; 0\n3*u^2; -u\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_pparts"))
        .args(["birkhoff", "--matrix"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(stdout.lines().next(), Some("{2, 2}"));

    std::fs::write(&path, "u; 0\n0; 1 + u\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_pparts"))
        .args(["birkhoff", "--matrix"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("not a vector-bundle transition"));

    std::fs::write(&path, "u; 0\n0; u^x\n").unwrap();
    let o = run(["pparts", "birkhoff", "--matrix", path.to_str().unwrap()]);
    assert_eq!(o.exit_code, 2);
    assert!(o.stderr.contains("line 2, column 2"), "{}", o.stderr);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_exit_codes_follow_verdicts() {
    let status = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_pparts")).args(args).output().unwrap().status.code()
    };
    assert_eq!(status(&["kclass", "-N", "1", "O(5)"]), Some(0));
    assert_eq!(status(&["verify", "mainsplit", "-N", "3", "-l", "0"]), Some(1));
    assert_eq!(status(&["split", "-N", "1", "O(2) + + O(1)"]), Some(2));
}
