use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diagzeta"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).expect("utf-8 output")
}

fn json(args: &[&str]) -> (i32, Value, String) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = run(&full);
    let text = stdout(&o);
    let v: Value = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}"));
    (o.status.code().unwrap(), v, text)
}

fn rows(v: &Value) -> &Vec<Value> {
    v["results"].as_array().expect("results array")
}

#[test]
fn exact_examples() {
    let o = run(&["exact", "--family", "zeta", "--depth", "2", "--arg", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1/120 * pi^4\n");

    let o = run(&["exact", "--family", "zetastar", "--depth", "2", "--arg", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "-1/8\n");

    let o = run(&["exact", "--family", "zeta", "--depth", "1", "--arg", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("no exact closed form"));
}

#[test]
fn exact_strings_are_canonical() {
    for family in ["zeta", "zetastar", "t", "tstar"] {
        for arg in ["2", "4", "0", "-2", "-3"] {
            let o = run(&["exact", "--family", family, "--depth", "4", "--arg", arg]);
            assert_eq!(o.status.code(), Some(0));
            let s = stdout(&o);
            assert!(!s.contains("+ -") && !s.contains("- -"), "{s}");
            let parsed: diagzeta::PiValue = s.trim().parse().expect("canonical string parses");
            assert_eq!(parsed.to_canonical(), s.trim());
        }
    }
    let o = run(&["exact", "--family", "zeta", "--depth", "3", "--arg", "-4"]);
    assert_eq!(stdout(&o), "0\n");
}

#[test]
fn eval_depth_three_at_two() {
    let (code, v, _) = json(&["eval", "--family", "zeta", "--depth", "3", "--arg", "2", "--oracle-n", "5000"]);
    assert_eq!(code, 0);
    let expected = std::f64::consts::PI.powi(6) / 5040.0;
    let values: Vec<&Value> = rows(&v).iter().filter(|r| r["kind"] == "value").collect();
    assert_eq!(values.len(), 4);
    for r in &values {
        let x = r["value"].as_f64().unwrap();
        assert!((x - expected).abs() / expected < 1e-5, "{r}");
    }
    let oracle = values.iter().find(|r| r["method"] == "oracle").unwrap();
    assert!(oracle["error_bound"].as_f64().unwrap() > 0.0);
    assert_eq!(rows(&v).iter().filter(|r| r["kind"] == "delta").count(), 6);
}

#[test]
fn eval_depth_zero_and_pole() {
    let (code, v, _) = json(&["eval", "--family", "t", "--depth", "0", "--arg", "7"]);
    assert_eq!(code, 0);
    assert!(rows(&v).iter().filter(|r| r["kind"] == "value").all(|r| r["value"] == 1.0));

    let o = run(&["eval", "--family", "zeta", "--depth", "2", "--arg", "0.5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("2·s = 1"), "{}", stderr(&o));
}

#[test]
fn eval_rejects_bad_arguments() {
    for arg in ["abc", "inf", "NaN"] {
        let o = run(&["eval", "--depth", "2", "--arg", arg]);
        assert_eq!(o.status.code(), Some(2), "{arg}");
    }
    let o = run(&["eval", "--depth", "2", "--arg", "0.8", "--oracle-n", "100"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["eval", "--family", "nope", "--depth", "2", "--arg", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["verify", "--suite", "functional-relation", "--max-depth", "6"][..],
        &["verify", "--suite", "merca", "--max-k", "10"][..],
        &["verify", "--suite", "three-way", "--max-depth", "6"][..],
        &["verify", "--suite", "harmonic"][..],
        &["verify", "--suite", "special-values", "--max-depth", "6"][..],
    ] {
        let (code, v, _) = json(args);
        assert_eq!(code, 0, "{args:?}");
        assert_eq!(v["verdict"], "pass");
    }
}

#[test]
fn printed_star_form_is_informational() {
    let (code, v, _) = json(&["verify", "--suite", "functional-relation", "--max-depth", "2"]);
    assert_eq!(code, 0);
    let printed: Vec<&Value> = rows(&v)
        .iter()
        .filter(|r| r["identity"] == "functional-relation-tstar-printed")
        .collect();
    assert_eq!(printed.len(), 1);
    assert_eq!(printed[0]["pass"], false);
    assert_eq!(printed[0]["informational"], true);
    assert_eq!(printed[0]["lhs"], "5/384 * pi^4");
}

#[test]
fn verify_failure_exits_one() {
    let o = run(&["verify", "--suite", "harmonic", "--tolerance", "0"]);
    let code = o.status.code().unwrap();
    // A zero threshold fails unless every residual happens to be exactly 0.
    let text = stdout(&o);
    if text.contains("0 failed") {
        assert_eq!(code, 0);
    } else {
        assert_eq!(code, 1);
        assert!(text.contains("verdict: FAIL"));
    }
    let o = run(&["verify", "--suite", "three-way", "--max-depth", "2", "--tolerance", "1e-300"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn poles_tables() {
    let (code, v, _) = json(&["poles", "--depth", "2"]);
    assert_eq!(code, 0);
    let r = rows(&v);
    assert_eq!(r.len(), 2);
    assert_eq!((r[0]["k"].as_i64(), r[0]["order"].as_i64()), (Some(1), Some(2)));
    assert_eq!((r[1]["k"].as_i64(), r[1]["order"].as_i64()), (Some(2), Some(1)));
    assert_eq!(r[1]["leading_coefficient"].as_f64(), Some(-0.5));

    let (code, v, _) = json(&["poles", "--depth", "1"]);
    assert_eq!(code, 0);
    assert_eq!(rows(&v).len(), 1);
    assert_eq!(rows(&v)[0]["leading_coefficient"].as_f64(), Some(1.0));
    assert!((rows(&v)[0]["estimate"].as_f64().unwrap() - 1.0).abs() < 1e-6);

    let (code, v, _) = json(&["poles", "--depth", "6"]);
    assert_eq!(code, 0);
    assert_eq!(rows(&v).len(), 6);
    assert!(rows(&v).iter().all(|r| r["pass"] == true && r["certified"] == true));

    let o = run(&["poles", "--depth", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn poles_tolerance_override_can_fail() {
    let o = run(&["poles", "--depth", "3", "--tolerance", "1e-15"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn json_round_trips_byte_identically() {
    let cases: &[&[&str]] = &[
        &["eval", "--family", "tstar", "--depth", "4", "--arg", "2.5", "--oracle-n", "2000"],
        &["eval", "--family", "zeta", "--depth", "3", "--arg", "0.3"],
        &["exact", "--family", "t", "--depth", "3", "--arg", "4"],
        &["verify", "--suite", "merca", "--max-k", "4"],
        &["verify", "--suite", "functional-relation", "--max-depth", "3"],
        &["poles", "--depth", "4"],
        &["table", "--max-depth", "3", "--arg", "3.25", "--oracle-n", "500"],
        &["table", "--max-depth", "3", "--arg", "-2"],
    ];
    for args in cases {
        let (_, v, text) = json(args);
        for key in ["command", "parameters", "results", "verdict"] {
            assert!(v.get(key).is_some(), "{args:?} lacks {key}");
        }
        let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
        assert_eq!(again, text, "{args:?}");
    }
}

#[test]
fn table_csv_columns() {
    let o = run(&["table", "--family", "zeta", "--max-depth", "3", "--arg", "2.5", "--oracle-n", "1000", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("family,depth,argument,method,value,error_bound"));
    let body: Vec<&str> = lines.collect();
    assert_eq!(body.len(), 9);
    assert!(body.iter().all(|l| l.split(',').count() == 6));
    assert!(body[2].starts_with("zeta,1,2.5,oracle,"));
    assert!(!body[2].ends_with(','));

    let o = run(&["table", "--max-depth", "2", "--arg", "2", "--format", "csv"]);
    let text = stdout(&o);
    assert!(text.contains("zetastar,2,2,closed-form,7/360 * pi^4,"));
    assert!(text.contains("tstar,2,2,closed-form,5/384 * pi^4,"));
}

#[test]
fn csv_only_for_table() {
    let o = run(&["poles", "--depth", "2", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["exact", "--depth", "2"]).status.code(), Some(2));
    assert_eq!(run(&["exact", "--depth", "2", "--arg", "2.5"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "--depth", "40", "--arg", "2"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn in_process_runner_matches_binary() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = diagzeta_cli::run(
        ["diagzeta", "exact", "--family", "tstar", "--depth", "2", "--arg", "2"],
        &mut out,
        &mut err,
    );
    assert_eq!(code, 0);
    assert_eq!(String::from_utf8(out).unwrap(), "5/384 * pi^4\n");
}
