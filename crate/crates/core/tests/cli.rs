use std::ffi::OsString;

use euler_hurwitz::cli::{run, EXIT_NUMERIC, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn ehz(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv: Vec<OsString> = std::iter::once("ehz").chain(args.iter().copied()).map(OsString::from).collect();
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = ehz(args);
    assert_eq!(code, EXIT_OK, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn eval_json_envelope() {
    let v = json(&["eval", "--formula", "euler-hurwitz", "--q", "4", "--x", "1", "--terms", "100000", "--format", "json"]);
    assert_eq!(v["command"], "eval");
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v["params"]["mode"], "FAST");
    assert_eq!(v["result"]["terms_used"], 100000);
    let value: f64 = v["result"]["value"].as_str().unwrap().parse().unwrap();
    let tail: f64 = v["result"]["tail_estimate"].as_str().unwrap().parse().unwrap();
    assert!((value - 1.036_927_755_143_37).abs() <= 3.0 * tail);
}

#[test]
fn mode_and_precision_selection() {
    let v = json(&["eval", "--formula", "sondow-alt", "--s", "2", "--terms", "60", "--format", "json"]);
    assert_eq!(v["params"]["mode"], "HIGH");
    assert_eq!(v["params"]["digits"], 30);
    let v = json(&["eval", "--formula", "sondow-alt", "--s", "2", "--terms", "200", "--precision", "50", "--format", "json"]);
    assert_eq!(v["params"]["digits"], 50);
    let value = v["result"]["value"].as_str().unwrap();
    assert!(value.starts_with("0.822467033424113218236207583323012594609474950"), "{value}");
    let v = json(&["eval", "--formula", "sondow-alt", "--s", "2", "--terms", "60", "--mode", "fast", "--format", "json"]);
    assert_eq!(v["params"]["mode"], "FAST");
    assert_eq!(ehz(&["eval", "--formula", "sondow-alt", "--s", "2", "--terms", "60", "--precision", "5000"]).0, EXIT_USAGE);
}

#[test]
fn decimal_s_is_exact_and_decimal_x_rejected() {
    let a = json(&["eval", "--formula", "hasse", "--s", "2.5", "--terms", "100", "--format", "json"]);
    let b = json(&["eval", "--formula", "hasse", "--s", "5/2", "--terms", "100", "--format", "json"]);
    assert_eq!(a["result"], b["result"]);
    let (code, _, err) = ehz(&["eval", "--formula", "hasse", "--s", "2", "--x", "0.25", "--terms", "100"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("p/q"));
}

#[test]
fn exit_codes() {
    assert_eq!(ehz(&["eval", "--formula", "euler-sum", "--terms", "10"]).0, EXIT_USAGE);
    assert_eq!(ehz(&["eval", "--formula", "euler-sum", "--kind", "E99", "--terms", "10"]).0, EXIT_USAGE);
    assert_eq!(ehz(&["eval", "--formula", "euler-hurwitz", "--q", "1", "--x", "0", "--terms", "10"]).0, EXIT_NUMERIC);
    assert_eq!(ehz(&["eval", "--formula", "hasse", "--s", "3/2", "--terms", "100000"]).0, EXIT_NUMERIC);
    assert_eq!(ehz(&["eval", "--formula", "euler-hurwitz", "--q", "1", "--terms", "0"]).0, EXIT_NUMERIC);
    assert_eq!(ehz(&["converge", "--formula", "euler-hurwitz", "--q", "1", "--terms", "100,10"]).0, EXIT_USAGE);
    assert_eq!(ehz(&["verify"]).0, EXIT_USAGE);
    assert_eq!(ehz(&["verify", "--id", "no_such"]).0, EXIT_USAGE);
    assert_eq!(ehz(&["--version"]).0, EXIT_OK);
}

#[test]
fn verify_reports_and_skips() {
    let v = json(&["verify", "--id", "coppo_30", "--n-max", "5", "--q-max", "2", "--x", "-2", "--format", "json"]);
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 12);
    assert_eq!(reports.iter().filter(|r| r["status"] == "SKIP").count(), 8);
    assert!(reports.iter().all(|r| r["status"] != "FAIL"));
    let (code, out, _) = ehz(&["verify", "--all", "--profile", "quick", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("id,params,status,lhs,rhs,detail\n"));
    assert!(!out.contains(",FAIL,"));
}

#[test]
fn output_file_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("eval.csv");
    let p = path.to_str().unwrap();
    let (code, out, _) = ehz(&["eval", "--formula", "catalan-central", "--terms", "1000", "--format", "csv", "--output", p]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("formula,N,value,tail_estimate,reference,abs_error"));
    assert!(lines.next().unwrap().starts_with("catalan-central,1000,0.9"));
}

#[test]
fn converge_is_deterministic_apart_from_timing() {
    let args = ["converge", "--formula", "stirling-route", "--q", "2", "--x", "1/2", "--terms", "10,100,1000", "--format", "json"];
    let strip = |mut v: Value| {
        for row in v["result"]["rows"].as_array_mut().unwrap() {
            row.as_object_mut().unwrap().remove("seconds");
        }
        v
    };
    let a = strip(json(&args));
    let b = strip(json(&args));
    assert_eq!(a, b);
    assert_eq!(a["result"]["rows"].as_array().unwrap().len(), 3);
}

#[test]
fn constants_formats() {
    let v = json(&["constants", "--digits", "40", "--format", "json"]);
    assert_eq!(v["result"]["pi"], "3.1415926535897932384626433832795028841972");
    assert_eq!(v["result"]["zeta3"], "1.2020569031595942853997381615114499907650");
    let (_, out, _) = ehz(&["constants", "--digits", "3", "--format", "csv"]);
    assert!(out.starts_with("name,value\ngamma,0.577\n"));
}
