use std::process::Command;

use fockweyl::cli::run_command;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String) {
    run_command(std::iter::once("fwl").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut argv = args.to_vec();
    argv.extend(["--format", "json"]);
    let (code, out) = run(&argv);
    (code, serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}")))
}

#[test]
fn fock_apply() {
    let (code, out) = run(&["fock", "apply", "--op", "F", "--i", "1", "--ell", "2", "--partition", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "v^-1*|1,1> + |2>");
    let (code, out) = run(&["fock", "apply", "--op", "E", "--i", "1", "--ell", "2", "--partition", "2"]);
    assert_eq!((code, out.trim()), (0, "v*|1>"));
    let (code, out) = run(&["fock", "apply", "--op", "F", "--i", "1", "--ell", "2", "--partition", ""]);
    assert_eq!((code, out.trim()), (0, "0"));
}

#[test]
fn jantzen_figure_two() {
    let (code, out) = run(&["jantzen", "ev", "--partition", "10,10,8,8,8,6,6,6,6,1,1", "--k", "6"]);
    assert_eq!(code, 0);
    assert!(out.contains("[2][7]/([5][9])"), "{out}");
    let (code, out) = run(&["jantzen", "val", "--partition", "1,1", "--k", "2", "--ell", "2"]);
    assert_eq!((code, out.trim()), (0, "zero"));
    let (code, out) = run(&["jantzen", "val", "--partition", "1", "--k", "2", "--ell", "2"]);
    assert_eq!((code, out.trim()), (0, "-1"));
}

#[test]
fn other_subcommands_succeed() {
    for argv in [
        vec!["partition", "stats", "--partition", "3,1", "--ell", "3"],
        vec!["shapovalov", "det", "--eta", "-1,1", "--rank", "2"],
        vec!["shapovalov", "det", "--eta", "-1,0,1", "--rank", "3", "--engine"],
        vec!["jantzen", "closed", "--k", "2", "--rank", "2"],
        vec!["jantzen", "engine", "--k", "3", "--rank", "3"],
    ] {
        let (code, out) = run(&argv);
        assert_eq!(code, 0, "{argv:?}: {out}");
        let (code, _) = json(&argv);
        assert_eq!(code, 0, "{argv:?} as json");
    }
}

#[test]
fn usage_errors_exit_two() {
    for argv in [
        vec!["verify", "bogus"],
        vec!["fock", "apply", "--op", "F", "--i", "1", "--nope"],
        vec!["fock", "apply", "--op", "F", "--i", "5", "--ell", "2", "--partition", "1"],
        vec!["fock", "apply", "--op", "F", "--i", "0", "--ell", "2", "--partition", "1,2"],
        vec!["shapovalov", "det", "--eta", "1,2,3", "--rank", "2"],
        vec!["verify", "lemma62", "--ell", "1"],
    ] {
        let (code, out) = run(&argv);
        assert_eq!(code, 2, "{argv:?}: {out}");
    }
    let (code, out) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify"));
}

#[test]
fn verify_theorem61_json() {
    let (code, v) = json(&["verify", "theorem61", "--ell", "3", "--max-size", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], "fwl-report/1");
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["schema", "version", "config", "cases", "passed", "failed"]);
    let cases = v["cases"].as_array().unwrap();
    // partitions of size at most 4
    assert_eq!(cases.len(), 1 + 1 + 2 + 3 + 5);
    assert_eq!(v["passed"], cases.len());
    assert_eq!(v["failed"], 0);
    for c in cases {
        assert_eq!(c["family"], "theorem61");
        assert_eq!(c["pass"], true);
        assert!(c["detail"]["boxes"].is_array());
    }
}

#[test]
fn reports_are_deterministic() {
    let base = ["verify", "all", "--ell", "2,3", "--max-size", "3", "--format", "json"];
    let (c1, one) = run(&[&base[..], &["--jobs", "1"]].concat());
    let (c4, four) = run(&[&base[..], &["--jobs", "4"]].concat());
    let (c4b, again) = run(&[&base[..], &["--jobs", "4"]].concat());
    assert_eq!((c1, c4, c4b), (0, 0, 0));
    assert_eq!(one, four);
    assert_eq!(four, again);
}

#[test]
fn injected_failure_exits_one() {
    let (code, v) = json(&["verify", "theorem61", "--max-size", "2", "--inject-failure"]);
    assert_eq!(code, 1);
    assert_eq!(v["failed"], 1);
    let (code, out) = run(&["verify", "lemma63", "--inject-failure"]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL"), "{out}");
}

#[test]
fn empty_report_shape() {
    let r = fockweyl::verify::Report::new(fockweyl::verify::RunConfig::default(), Vec::new());
    let v: Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(v["cases"], Value::Array(vec![]));
    assert_eq!(v["passed"], 0);
    assert_eq!(v["failed"], 0);
    assert!(r.all_passed());
}

#[test]
fn binary_streams_and_codes() {
    let bin = env!("CARGO_BIN_EXE_fwl");
    let out = Command::new(bin)
        .args(["fock", "apply", "--op", "K", "--i", "1", "--ell", "2", "--partition", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "v^2*|1>");

    let out = Command::new(bin).args(["verify", "--no-such-flag"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
}
