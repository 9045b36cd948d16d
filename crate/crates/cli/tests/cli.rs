use std::process::{Command, Output};

use quatfiber_cli::report::{Report, Verdict};

fn quatfiber(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quatfiber"))
        .args(args)
        .env_remove("ZF_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_report(args: &[&str]) -> (Output, String) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let mut full = args.to_vec();
    let p = path.to_str().unwrap().to_string();
    full.extend(["--json", &p]);
    let out = quatfiber(&full);
    let json = std::fs::read_to_string(&path).unwrap_or_default();
    (out, json)
}

#[test]
fn icosahedral_degree() {
    let out = quatfiber(&["zerofiber", "--gamma", "bi"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("degree = 239"), "{text}");
    assert!(text.contains("x^11y"));
}

#[test]
fn tetrahedral_commutator_numerology() {
    let (out, json) = json_report(&["numerology", "--gamma", "bt", "--delta", "comm", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("N = 38"));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["values"]["numerology"]["N"], "38");
    assert_eq!(v["values"]["numerology"]["g"], "38");
    assert_eq!(v["args"]["delta"], "comm");
}

#[test]
fn json_is_deterministic_and_round_trips() {
    let args = ["lowerbound", "--gamma", "bd:3", "--delta", "cyc2", "--n", "3"];
    let (_, a) = json_report(&args);
    let (_, b) = json_report(&args);
    assert!(!a.is_empty());
    assert_eq!(a, b);
    let report: Report = serde_json::from_str(&a).unwrap();
    assert_eq!(report.to_json(), a);
    assert!(report.checks.iter().all(|c| c.verdict == Verdict::Pass));
    assert!(!a.contains("elapsed"));
}

#[test]
fn exit_codes() {
    assert_eq!(quatfiber(&["zerofiber", "--gamma", "e9"]).status.code(), Some(2));
    assert_eq!(quatfiber(&["numerology", "--gamma", "cyclic:0"]).status.code(), Some(2));
    assert_eq!(
        quatfiber(&["numerology", "--gamma", "bt", "--delta", "cyc2"]).status.code(),
        Some(2)
    );
    let (out, json) = json_report(&["numerology", "--gamma", "bo", "--n", "4", "--cap", "1000"]);
    assert_eq!(out.status.code(), Some(3));
    let report: Report = serde_json::from_str(&json).unwrap();
    assert_eq!(report.checks[0].verdict, Verdict::Skipped);
}

#[test]
fn cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_quatfiber"))
        .args(["numerology", "--gamma", "bt", "--n", "2"])
        .env("ZF_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn mckay_dot_export() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("e6.dot");
    let out = quatfiber(&[
        "mckay",
        "--gamma",
        "bt",
        "--delta",
        "comm",
        "--dot",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("E6^(1)"));
    assert!(text.contains("dim α = 15"));
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("graph mckay {"));
    assert_eq!(dot.matches(" -- ").count(), 6);
}

#[test]
fn audit_reports_corrections() {
    let out = quatfiber(&["audit", "--gamma", "bt"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("16xy^9"));
    assert!(text.contains("[corrected]"));
    assert!(!text.contains("[fail"));
}

#[test]
fn lower_bound_text() {
    let out = quatfiber(&["lowerbound", "--gamma", "bt", "--delta", "comm", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("g = 38  (g+1)^n = 1521"), "{text}");
    assert!(text.contains("dim L = Σ ch_i n_i = 39"));
}

#[test]
fn small_tables() {
    let (out, json) = json_report(&["tables", "--n-min", "2", "--n-max", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("n+1"));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let rows = v["values"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 16);
    let e6 = rows
        .iter()
        .find(|r| r["case"].as_str().unwrap().starts_with("E6") && r["n"] == "2")
        .unwrap();
    assert_eq!(e6["dimension"], "5");
    assert_eq!(quatfiber(&["tables", "--n-min", "4", "--n-max", "3"]).status.code(), Some(2));
}

#[test]
fn catalog_lists_the_families() {
    let out = quatfiber(&["catalog"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for name in ["cyclic:8", "bd:5", "E6", "E7", "E8"] {
        assert!(text.contains(name), "{name}");
    }
}

#[test]
fn appendix_on_a_small_case() {
    let out = quatfiber(&["appendix", "--gamma", "bd:2", "--delta", "cyc2", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).matches("[pass").count(), 4);
}

#[test]
fn selftest_passes() {
    let out = quatfiber(&["selftest"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert_eq!(stdout(&out).matches(": pass ").count(), 10);
}
