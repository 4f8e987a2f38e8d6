//! CLI surface tests: flags, text formats, exit codes, report files.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_e7rep"))
}

#[test]
fn roots_positive_e7_prints_63_lines() {
    let out = bin()
        .args(["roots", "--system", "e7", "--positive"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 63);
    for line in &lines {
        let nums: Vec<i32> = line
            .split_whitespace()
            .map(|t| t.parse().unwrap())
            .collect();
        assert_eq!(nums.len(), 8);
        assert_eq!(nums[7], 0, "E7 roots have k8 = 0");
    }
    assert!(lines.contains(&"2 2 3 4 3 2 1 0"), "highest root present");
}

#[test]
fn roots_e8_prints_240_lines() {
    let out = bin().args(["roots", "--system", "e8"]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 240);
}

#[test]
fn identity_prints_unit_quartet() {
    let out = bin()
        .args(["identity", "--max-degree", "3"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next().unwrap(), "1 1 1 1");
}

#[test]
fn singular_solve_prints_the_quadratic_vector() {
    let out = bin()
        .args(["singular", "--degree", "2", "--weight", "1,0,0,0,0,0,0"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("1 singular vector"));
    assert!(text.contains("+(1)*x1*x17 +(1)*x2*x14 +(1)*x3*x12 +(1)*x4*x10 +(1)*x5*x9 -(1)*x6*x7"));
}

#[test]
fn output_is_deterministic() {
    let run = || {
        bin()
            .args(["singular", "--degree", "2", "--weight", "0,0,0,0,0,0,2"])
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run(), run());
}

#[test]
fn json_report_matches_schema() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = bin()
        .args(["decompose", "--degree", "2", "--json"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    let object = value.as_object().unwrap();
    for key in [
        "suite",
        "checks_run",
        "failures",
        "wall_time_secs",
        "erratum_log",
    ] {
        assert!(object.contains_key(key), "missing report field {key}");
    }
    assert_eq!(object.len(), 5, "undocumented report fields present");
    assert!(object["failures"].as_array().unwrap().is_empty());
    assert!(object["checks_run"].as_u64().unwrap() >= 1);
    for entry in object["erratum_log"].as_array().unwrap() {
        assert!(entry.get("id").is_some() && entry.get("detail").is_some());
    }
}

#[test]
fn budget_refusal_uses_distinct_exit_code() {
    let out = bin()
        .args(["pde", "--check", "0", "0", "11", "0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8(out.stderr).unwrap().contains("budget"));
}

#[test]
fn failing_check_uses_exit_code_one() {
    // a non-dominant weight cannot be a highest weight
    let out = bin()
        .args(["dims", "--weight", "-1,0,0,0,0,0,0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unknown_subcommand_is_usage_error() {
    let out = bin().arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invariant_emit_writes_canonical_text() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("eta.txt");
    let out = bin()
        .args(["invariant", "eta", "--emit"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let eta = e7rep::poly::Polynomial::parse_text(text.trim()).unwrap();
    assert_eq!(eta.num_terms(), 1036);
    assert_eq!(eta.degree(), 4);
    assert_eq!(eta.to_text(), text.trim(), "round-trip is bit-exact");
}

#[test]
fn pde_audit_prints_solution_counts() {
    let out = bin().args(["pde", "--audit"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("m3=0 m4=0: 0 candidate exponent solutions"));
    assert!(text.contains("m3=0 m4=2: 1 candidate exponent solutions"));
}
