use std::process::Command;

use kn_algebra::cli::run;
use serde_json::Value;

fn kn(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_kn")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = run(all);
    assert_eq!(out.code, 0, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn binary_matches_library() {
    let args = ["table", "K1", "--window", "1"];
    let out = kn(&args);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), run(args).stdout);
}

#[test]
fn table_lines() {
    let out = run(["table", "Witt", "--window", "1"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("L_-1 * L_1 = 2*L_0\n"), "{}", out.stdout);
    assert!(out.stdout.ends_with("table: PASS\n"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(kn(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(["table", "Nope"]).code, 2);
    assert_eq!(run(["table", "Jsigma", "--theta", "0"]).code, 2);
    assert_eq!(run(["table", "Jsigma", "--sigma", "2"]).code, 2);
    let out = run(["simplicity", "--seed", "y^^2"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.starts_with("error:"));
}

#[test]
fn help_goes_to_stdout() {
    let out = run(["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("verify-axioms"));
}

#[test]
fn negative_parameters_parse() {
    let v = json(&["verify-axioms", "Lthetap", "--theta", "-2/3", "--p", "-2", "--window", "2"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["report"]["params"]["theta"], "-2/3");
    assert_eq!(v["report"]["params"]["p"], "-2");
}

#[test]
fn json_axiom_report() {
    let v = json(&["verify-axioms", "J03", "--window", "2"]);
    assert_eq!(v["command"], "verify-axioms");
    let ids: Vec<&str> = v["report"]["outcomes"].as_array().unwrap().iter().map(|o| o["identity"].as_str().unwrap()).collect();
    assert_eq!(ids, ["SJ1", "LA0", "LA1", "LA2", "LA3"]);
}

#[test]
fn stride_samples_tuples() {
    let v = json(&["verify-axioms", "Jsigma", "--sigma", "1", "--window", "2", "--stride", "7"]);
    let o = &v["report"]["outcomes"][1];
    assert!(o["tuples_checked"].as_u64().unwrap() < o["tuples_total"].as_u64().unwrap());
}

#[test]
fn csv_and_latex() {
    let out = run(["cross-check", "L03", "--window", "2", "--format", "csv"]);
    let mut lines = out.stdout.lines();
    assert_eq!(lines.next(), Some("algebra,oracle,pairs_checked,mismatches,first_mismatch"));
    assert!(lines.next().unwrap().starts_with("L03,\"geometry(three punctures, s = 1)\","));
    let tex = run(["table", "AK1", "--window", "1", "--format", "latex"]).stdout;
    assert!(tex.starts_with("\\begin{tabular}{lll}"));
    assert!(tex.contains("$\\varepsilon_{0}$ & $a_{1/2}$ & $1/2 a_{1/2}$"), "{tex}");
}

#[test]
fn params_sweep_runs_seven_values() {
    let v = json(&["cross-check", "Jsigma", "--window", "2", "--params-sweep"]);
    let runs = v["report"]["runs"].as_array().unwrap();
    assert_eq!(runs.len(), 7);
    assert!(runs.iter().all(|r| r["passed"] == true));
    assert_eq!(runs[5]["params"], "theta=-2/3, p=-1, sigma=1/2");
}

#[test]
fn classify_expectation_sets_exit_code() {
    let ok = run(["classify-lambda", "--lambdas", "0,1/2,1", "--window", "2", "--expect", "0,1/2"]);
    assert_eq!(ok.code, 0, "{}", ok.stdout);
    assert!(ok.stdout.contains("lambda=1: fails"));
    let bad = run(["classify-lambda", "--lambdas", "0,1", "--window", "2", "--expect", "0,1"]);
    assert_eq!(bad.code, 1);
}

/// Witt into K1 on `|n| <= 2`: `L_n` goes to `2*L_n`, except `L_1` goes to `c*L_1`.
fn spec(c: &str) -> String {
    let images: Vec<String> = (-2..=2)
        .map(|n| {
            let c = if n == 1 { c } else { "2" };
            format!(r#"{{"key": "L_{n}", "vector": {{"L_{n}": "{c}"}}}}"#)
        })
        .collect();
    format!(r#"{{"source": {{"name": "Witt"}}, "target": {{"name": "K1"}}, "images": [{}]}}"#, images.join(", "))
}

#[test]
fn check_hom_pass_and_fail() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.json");
    std::fs::write(&good, spec("2")).unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, spec("1")).unwrap();
    let g = good.to_str().unwrap();
    assert_eq!(run(["check-hom", "--spec", g, "--window", "1"]).code, 0);
    let out = run(["check-hom", "--spec", bad.to_str().unwrap(), "--window", "1"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("first violation"));
    // Images are only given on the window, so a larger window cannot be checked.
    assert_eq!(run(["check-hom", "--spec", g, "--window", "2"]).code, 2);
    assert_eq!(run(["check-hom", "--spec", "/no/such/file.json"]).code, 2);
}

#[test]
fn manifest_holds_timing_but_stdout_does_not() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.json");
    let p = path.to_str().unwrap();
    let a = run(["ovs", "--window", "2", "--format", "json", "--manifest", p]);
    assert_eq!(a.code, 0);
    assert!(!a.stdout.contains("elapsed"));
    let m: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(m["elapsed_ms"].is_u64());
    assert_eq!(m["window"], 2);
    assert_eq!(m["passed"], true);
    assert_eq!(m["command"][0], "ovs");
    let b = run(["ovs", "--window", "2", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn simplicity_witness_json() {
    let v = json(&["simplicity", "--seed", "y^2+x*y", "--theta", "2", "--p", "2"]);
    assert_eq!(v["report"]["verified"], true);
    let steps = v["report"]["witness"]["steps"].as_array().unwrap();
    assert_eq!(steps.first().unwrap()["rule"], "seed");
    assert_eq!(steps.last().unwrap()["element"], "1");
}

#[test]
fn zero_theta_is_rejected() {
    let out = run(["simplicity", "--seed", "y", "--theta", "0"]);
    assert_eq!(out.code, 2);
}

#[test]
fn remaining_subcommands_pass() {
    for args in [
        vec!["ovs", "--window", "2", "--sqrt-alpha", "3/2"],
        vec!["embed-witt", "--window", "2"],
        vec!["embed-witt", "--window", "2", "--lie"],
        vec!["doubling-check", "JTorus", "--window", "2", "--theta1", "0"],
        vec!["derivations", "--window", "2", "--margin", "3"],
        vec!["classify-lambda", "--mode", "algebraic", "--lambdas", "1/4", "--window", "2", "--expect", "1/4"],
    ] {
        let out = run(args.iter().copied());
        assert_eq!(out.code, 0, "{args:?}: {}{}", out.stdout, out.stderr);
    }
}
