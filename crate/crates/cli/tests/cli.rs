//! End-to-end tests that drive the compiled binary the way a shell would:
//! spawn it, capture stdout/stderr, and check digits, exit codes, and the
//! JSON report contract.

use std::process::{Command, Output};

use serde::{Deserialize, Serialize};

/// Mirror of the binary's report object, field-for-field, so round-trip
/// equality checks the serialized layout and not just the values.
#[derive(Debug, PartialEq, Serialize, Deserialize)]
struct Report {
    value_digits: String,
    terms_used: usize,
    elapsed_ms: u64,
    method: String,
    warnings: Vec<String>,
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hurwitz"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "expected success for {args:?}, stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 stdout")
}

fn value_line(args: &[&str]) -> String {
    stdout_of(args).trim_end().to_string()
}

const ZETA3_50: &str = "1.2020569031595942853997381615114499907649862923405";

#[test]
fn zeta3_at_the_default_argument_prints_the_expected_digits() {
    let got = value_line(&["compute", "--target", "zeta3", "--digits", "50"]);
    assert_eq!(got, ZETA3_50);
}

#[test]
fn printed_digits_are_bit_identical_across_runs() {
    let args = ["compute", "--target", "zeta2", "--a", "1/5", "--digits", "80"];
    let first = value_line(&args);
    let second = value_line(&args);
    assert_eq!(first, second);
    assert_eq!(first.chars().filter(char::is_ascii_digit).count(), 80);
}

#[test]
fn guard_settings_do_not_change_the_printed_digits() {
    let args = ["compute", "--target", "zeta3", "--a", "1/3", "--digits", "60"];
    let plain = value_line(&args);
    let flagged = value_line(&["compute", "--target", "zeta3", "--a", "1/3", "--digits", "60", "--guard", "45"]);
    let env = Command::new(env!("CARGO_BIN_EXE_hurwitz"))
        .args(args)
        .env("HURWITZ_GUARD", "60")
        .output()
        .expect("binary runs");
    assert!(env.status.success());
    assert_eq!(plain, flagged);
    assert_eq!(plain, String::from_utf8(env.stdout).unwrap().trim_end());
}

#[test]
fn json_report_round_trips_through_parse_and_emit_unchanged() {
    let raw = value_line(&["compute", "--target", "zeta2", "--a", "3/4", "--digits", "40", "--json"]);
    let parsed: Report = serde_json::from_str(&raw).expect("report parses");
    assert_eq!(serde_json::to_string(&parsed).unwrap(), raw);
    assert_eq!(parsed.method, "fast");
    assert!(parsed.warnings.is_empty());
    assert_eq!(parsed.value_digits.chars().filter(char::is_ascii_digit).count(), 40);
}

#[test]
fn x_offset_flag_is_equivalent_to_the_shifted_argument() {
    let via_a = value_line(&["compute", "--target", "zeta2", "--a", "1/5", "--digits", "30"]);
    let via_x = value_line(&["compute", "--target", "zeta2", "--x-offset", "-4/5", "--digits", "30"]);
    assert_eq!(via_a, via_x);
}

#[test]
fn dedicated_l_series_matches_the_decomposition_route() {
    let dedicated = value_line(&[
        "compute", "--target", "L", "--disc", "-8", "--s", "2", "--digits", "50",
        "--method", "fast-series",
    ]);
    let decomposed = value_line(&[
        "compute", "--target", "L", "--disc", "-8", "--s", "2", "--digits", "50",
        "--method", "decomposition",
    ]);
    // Both print 50 significant digits; demand agreement on the first 45.
    assert_eq!(dedicated[..46], decomposed[..46]);
}

#[test]
fn continued_fraction_targets_match_the_series_values() {
    let series = value_line(&["compute", "--target", "zeta2", "--digits", "45"]);
    let fraction = value_line(&["compute", "--target", "zeta2cf", "--digits", "45"]);
    assert_eq!(series, fraction);
}

#[test]
fn bench_with_an_empty_digits_list_prints_only_the_header() {
    let out = run(&["bench", "--target", "zeta3"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 1);
    assert!(lines[0].contains("digits") && lines[0].contains("elapsed_ms"));
}

#[test]
fn bench_rows_carry_digit_term_and_time_columns() {
    let out = run(&["bench", "--target", "zeta2", "--digits-list", "30,60"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = stdout.lines().skip(1).collect();
    assert_eq!(rows.len(), 2);
    for (row, digits) in rows.iter().zip(["30", "60"]) {
        let fields: Vec<&str> = row.split_whitespace().collect();
        assert_eq!(fields.len(), 3);
        assert_eq!(fields[0], digits);
        assert!(fields[1].parse::<u64>().unwrap() > 0);
        fields[2].parse::<u64>().expect("elapsed is integral");
    }
}

#[test]
fn domain_errors_exit_with_code_two_and_name_the_precondition() {
    let cases: [&[&str]; 4] = [
        &["compute", "--target", "zeta2", "--a", "0", "--digits", "10"],
        &["compute", "--target", "L", "--disc", "7", "--digits", "10"],
        &["compute", "--target", "zeta3", "--a", "2", "--method", "cf", "--digits", "10"],
        &["compute", "--target", "zeta2", "--method", "fast-series", "--digits", "10"],
    ];
    let expected = ["a > 0", "fundamental", "a = 1", "does not apply"];
    for (args, needle) in cases.iter().zip(expected) {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "args: {args:?}");
        let stderr = String::from_utf8_lossy(&out.stderr);
        assert!(stderr.contains(needle), "stderr for {args:?}: {stderr}");
    }
}

#[test]
fn arguments_above_one_report_the_reduction_as_a_warning() {
    let raw = value_line(&["compute", "--target", "zeta2", "--a", "5/2", "--digits", "20", "--json"]);
    let parsed: Report = serde_json::from_str(&raw).unwrap();
    assert_eq!(parsed.warnings.len(), 1);
    assert!(parsed.warnings[0].contains("2 unit steps"));
    assert!(parsed.value_digits.starts_with("0.4903577561002348649"));
}

#[test]
fn verify_suites_print_pass_lines_and_exit_zero() {
    for suite in ["wz", "closed-forms"] {
        let out = run(&["verify", "--suite", suite, "--digits", "30"]);
        assert!(out.status.success(), "suite {suite}");
        let stdout = String::from_utf8(out.stdout).unwrap();
        assert!(stdout.lines().count() >= 6);
        assert!(stdout.lines().all(|l| l.starts_with("PASS")), "suite {suite}: {stdout}");
    }
}
