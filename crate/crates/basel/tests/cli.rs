//! End-to-end tests of the `basel` binary: exit codes, output formats,
//! JSON schema stability, and determinism.

use std::process::{Command, Output};

fn basel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_basel"))
        .args(args)
        .output()
        .expect("failed to run basel binary")
}

fn stdout_utf8(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("process exited normally")
}

fn parse_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout parses as JSON")
}

#[test]
fn zeta_exits_zero_and_prints_exact_fractions() {
    let out = basel(&["zeta", "--max-k", "3"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_utf8(&out);
    assert!(text.contains("(1/6)*pi^2"));
    assert!(text.contains("(1/90)*pi^4"));
    assert!(text.contains("(1/945)*pi^6"));
    assert!(text.contains("1.6449340668482264"));
}

#[test]
fn zeta_csv_has_header_and_rows() {
    let out = basel(&["zeta", "--max-k", "2", "--format", "csv"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_utf8(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("k,coefficient,value,approx,radius"));
    let row1 = lines.next().unwrap();
    assert!(row1.starts_with("1,1/6,(1/6)*pi^2,1.6449"));
    let row2 = lines.next().unwrap();
    assert!(row2.starts_with("2,1/90,(1/90)*pi^4,1.0823"));
}

#[test]
fn zeta_latex_uses_frac_notation() {
    let out = basel(&["zeta", "--max-k", "1", "--format", "latex"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_utf8(&out);
    assert!(text.contains("\\zeta(2) = \\frac{1}{6}\\pi^{2}"));
}

#[test]
fn zeta_json_schema_and_bytewise_round_trip() {
    let out = basel(&["zeta", "--max-k", "2", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let v = parse_json(&out);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(|s| s.as_str()).collect();
    assert_eq!(keys, ["command", "params", "rows", "status"]);
    assert_eq!(v["command"], "zeta");
    assert_eq!(v["status"], "ok");
    assert_eq!(v["params"]["max_k"], 2);
    assert_eq!(v["params"]["precision"], 128);
    assert_eq!(v["rows"][0]["coefficient"]["num"], "1");
    assert_eq!(v["rows"][0]["coefficient"]["den"], "6");
    assert_eq!(v["rows"][1]["coefficient"]["den"], "90");
    // Re-serializing the parsed document must reproduce stdout exactly.
    let round = serde_json::to_string(&v).unwrap() + "\n";
    assert_eq!(round.as_bytes(), &out.stdout[..]);
}

#[test]
fn bernoulli_conventions_differ_only_at_one() {
    let minus = basel(&["bernoulli", "--max-m", "4", "--convention", "minus"]);
    let plus = basel(&["bernoulli", "--max-m", "4", "--convention", "plus"]);
    assert_eq!(exit_code(&minus), 0);
    assert_eq!(exit_code(&plus), 0);
    let m = stdout_utf8(&minus);
    let p = stdout_utf8(&plus);
    assert!(m.contains("B_1 = -1/2"));
    assert!(p.contains("B_1 = 1/2"));
    for line in ["B_0 = 1", "B_2 = 1/6", "B_3 = 0", "B_4 = -1/30"] {
        assert!(m.contains(line), "minus output missing {line}");
        assert!(p.contains(line), "plus output missing {line}");
    }
}

#[test]
fn bernoulli_json_round_trips() {
    let out = basel(&["bernoulli", "--max-m", "6", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let v = parse_json(&out);
    assert_eq!(v["command"], "bernoulli");
    assert_eq!(v["params"]["convention"], "minus");
    assert_eq!(v["rows"][6]["value"]["num"], "1");
    assert_eq!(v["rows"][6]["value"]["den"], "42");
    let round = serde_json::to_string(&v).unwrap() + "\n";
    assert_eq!(round.as_bytes(), &out.stdout[..]);
}

#[test]
fn verify_all_passes_with_exit_zero() {
    let out = basel(&["verify", "all", "--max-index", "25"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_utf8(&out);
    for suite in ["lemma14", "eq11", "eq12", "lemma15"] {
        assert!(
            text.contains(&format!("{suite}: PASS")),
            "missing PASS line for {suite}"
        );
    }
    assert!(text.trim_end().ends_with("result: pass"));
}

#[test]
fn verify_single_suite_counts_even_indices() {
    let out = basel(&["verify", "eq11", "--max-index", "9", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let v = parse_json(&out);
    assert_eq!(v["rows"][0]["suite"], "eq11");
    assert_eq!(v["rows"][0]["checked"], 4); // m = 2, 4, 6, 8
    assert_eq!(v["rows"][0]["status"], "pass");
}

#[test]
fn verify_jobs_do_not_change_results() {
    let one = basel(&["verify", "all", "--max-index", "20", "--jobs", "1", "--format", "json"]);
    let four = basel(&["verify", "all", "--max-index", "20", "--jobs", "4", "--format", "json"]);
    assert_eq!(exit_code(&one), 0);
    assert_eq!(exit_code(&four), 0);
    let v1 = parse_json(&one);
    let v4 = parse_json(&four);
    assert_eq!(v1["rows"], v4["rows"]);
    assert_eq!(v1["status"], v4["status"]);
}

#[test]
fn corrupted_bernoulli_fails_with_witness() {
    let out = basel(&[
        "verify",
        "all",
        "--max-index",
        "12",
        "--corrupt-bernoulli",
        "4",
        "--format",
        "json",
    ]);
    assert_eq!(exit_code(&out), 1);
    let v = parse_json(&out);
    assert_eq!(v["status"], "fail");
    // B_4 first enters lemma14 at k = 2 and eq12 at k = 2.
    let rows = v["rows"].as_array().unwrap();
    let lemma14 = &rows[0];
    assert_eq!(lemma14["suite"], "lemma14");
    assert_eq!(lemma14["status"], "fail");
    assert_eq!(lemma14["witness"]["index"], 2);
    assert!(lemma14["witness"]["lhs"] != lemma14["witness"]["rhs"]);
    let eq12 = &rows[2];
    assert_eq!(eq12["status"], "fail");
    assert_eq!(eq12["witness"]["index"], 2);
}

#[test]
fn corruption_at_odd_index_is_caught_through_odd_terms() {
    // B_3 = 0 normally, so only suites whose sums touch odd indices see it.
    let out = basel(&[
        "verify",
        "eq12",
        "--max-index",
        "6",
        "--corrupt-bernoulli",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(exit_code(&out), 1);
    let v = parse_json(&out);
    assert_eq!(v["rows"][0]["witness"]["index"], 2);
}

#[test]
fn fourier_json_reports_containment() {
    let out = basel(&["fourier", "--k", "1", "--n-max", "3", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let v = parse_json(&out);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(|s| s.as_str()).collect();
    assert_eq!(keys, ["command", "params", "rows", "status"]);
    assert_eq!(v["command"], "fourier");
    assert_eq!(v["status"], "pass");
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows[0]["kind"], "a0");
    let moments: Vec<_> = rows.iter().filter(|r| r["kind"] == "moment").collect();
    assert_eq!(moments.len(), 3);
    for m in &moments {
        assert_eq!(m["contained"], true, "moment n={} not contained", m["n"]);
    }
    assert!(rows.iter().any(|r| r["kind"] == "partial_sum_error"));
    assert!(rows.iter().any(|r| r["kind"] == "reconstruction_error"));
    assert!(rows
        .iter()
        .any(|r| r["kind"] == "sine_terms" && r["all_zero"] == true));
    let round = serde_json::to_string(&v).unwrap() + "\n";
    assert_eq!(round.as_bytes(), &out.stdout[..]);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let a = basel(&["zeta", "--max-k", "4", "--precision", "192", "--format", "json"]);
    let b = basel(&["zeta", "--max-k", "4", "--precision", "192", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    let c = basel(&["verify", "all", "--max-index", "15", "--jobs", "3"]);
    let d = basel(&["verify", "all", "--max-index", "15", "--jobs", "3"]);
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["zeta"][..],                           // missing required flag
        &["zeta", "--max-k", "0"][..],           // below range
        &["zeta", "--max-k", "two"][..],         // not a number
        &["verify", "nonsense", "--max-index", "5"][..], // bad suite
        &["frobnicate"][..],                     // unknown subcommand
        &["bernoulli", "--max-m", "3", "--format", "yaml"][..], // bad format
    ] {
        let out = basel(args);
        assert_eq!(exit_code(&out), 2, "args {args:?} should exit 2");
    }
}

#[test]
fn help_and_version_exit_zero() {
    let help = basel(&["--help"]);
    assert_eq!(exit_code(&help), 0);
    let text = stdout_utf8(&help);
    for sub in ["zeta", "bernoulli", "verify", "fourier"] {
        assert!(text.contains(sub), "help missing subcommand {sub}");
    }
    let version = basel(&["--version"]);
    assert_eq!(exit_code(&version), 0);
    assert!(stdout_utf8(&version).contains("basel"));
}
