use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use mirabolic_core::decorated::{enumerate_xi2, Deco, Label2};
use mirabolic_core::field::RationalFunction as Rf;
use mirabolic_core::pbw::{PbwClass, PbwElement, PbwMonomial};
use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mirabolic")).args(args).output().expect("binary runs")
}

fn run_json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn rf(v: &Value) -> Rf {
    v.as_str().expect("coefficient string").parse().expect("coefficient grammar")
}

fn label_json(l: &Label2) -> Value {
    let [a, b, c, d] = l.a;
    let delta: Vec<Value> = l.deco.positions().iter().map(|&(i, j)| json!([i, j])).collect();
    json!({ "A": [[a, b], [c, d]], "delta": delta })
}

fn write_element(dir: &Path, name: &str, l: &Label2) -> String {
    let path = dir.join(name);
    let body = json!({ "d": l.d(), "terms": [{ "label": label_json(l), "coeff": "1" }] });
    fs::write(&path, body.to_string()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn verify_relations_d3() {
    let v = run_json(&["verify", "--suite", "relations", "--d", "3"]);
    assert_eq!(v["passed"], 10);
    assert_eq!(v["failed"], 0);
}

#[test]
fn verify_small_suites() {
    for (suite, d) in [("express", "2"), ("t22", "3"), ("casimir", "3"), ("rep", "2"), ("weights", "5"), ("combinatorics", "4")] {
        let out = run(&["verify", "--suite", suite, "--d", d]);
        assert_eq!(out.status.code(), Some(0), "{suite}");
        let v: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v["failed"], 0, "{suite}");
        assert!(v["passed"].as_u64().unwrap() > 0, "{suite}");
    }
}

#[test]
fn normalize_l_e_l() {
    let v = run_json(&["normalize", "--word", "l e l"]);
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 1);
    assert_eq!(terms[0]["class"], "B1");
    assert_eq!((terms[0]["r"].as_u64(), terms[0]["s"].as_u64(), terms[0]["t"].as_i64()), (Some(0), Some(1), Some(0)));
    assert_eq!(rf(&terms[0]["coeff"]), Rf::one());
    assert_eq!(v, run_json(&["normalize", "--word", "l e"]));
}

#[test]
fn normalize_e_f() {
    let v = run_json(&["normalize", "--word", "e f"]);
    let vv = Rf::v_pow(1) - Rf::v_pow(-1);
    let expect = PbwElement::from_terms([
        (PbwMonomial::new(PbwClass::B0, 1, 1, 0).unwrap(), Rf::one()),
        (PbwMonomial::new(PbwClass::B0, 0, 0, 1).unwrap(), Rf::one() / &vv),
        (PbwMonomial::new(PbwClass::B0, 0, 0, -1).unwrap(), -(Rf::one() / &vv)),
    ]);
    let mut got: Vec<(i64, Rf)> = v["terms"].as_array().unwrap().iter().map(|t| (t["t"].as_i64().unwrap(), rf(&t["coeff"]))).collect();
    let mut want: Vec<(i64, Rf)> = expect.terms().map(|(m, c)| (m.t, c.clone())).collect();
    got.sort_by_key(|x| x.0);
    want.sort_by_key(|x| x.0);
    assert_eq!(got, want);
}

#[test]
fn counts() {
    let out = run(&["count", "--n", "3", "--d", "5", "--tensor"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "2358");
    for d in 1..=3 {
        let v = run_json(&["count", "--n", "2", "--d", &d.to_string()]);
        assert_eq!(v.as_u64(), Some(enumerate_xi2(d).len() as u64));
    }
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{ not json").unwrap();
    let bad = bad.to_str().unwrap();
    for args in [
        vec!["frobnicate"],
        vec!["verify", "--suite", "nonsense", "--d", "2"],
        vec!["rep", "--module", "L+(0,01)"],
        vec!["normalize", "--word", "e x"],
        vec!["mul", "--lhs", bad, "--rhs", bad],
        vec!["oracle", "--d", "1", "--primes", "2,4", "--lhs", bad, "--rhs", bad],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn mul_matches_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let x = Label2::diag(1, 1, Deco::D11);
    let path = write_element(dir.path(), "x.json", &x);
    let prod = run_json(&["mul", "--lhs", &path, "--rhs", &path]);
    let log = dir.path().join("log.csv");
    let oracle = run_json(&["oracle", "--d", "2", "--primes", "2,3,5,7,11", "--lhs", &path, "--rhs", &path, "--log", log.to_str().unwrap()]);
    assert_eq!(prod, oracle);
    let terms = prod["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    let csv = fs::read_to_string(&log).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("label,p,count"));
    assert!(lines.all(|l| l.split(',').count() >= 3));
}

#[test]
fn mul_pbw_words() {
    let v = run_json(&["mul", "--pbw", "--lhs", "l e", "--rhs", "l"]);
    assert_eq!(v, run_json(&["normalize", "--word", "l e l"]));
}

#[test]
fn rep_report_and_decomposition() {
    let v = run_json(&["rep", "--module", "L+(1,01)", "--word", "e f"]);
    assert_eq!(v["module"], "L+(1,01)");
    assert_eq!(v["dim"], 2);
    assert_eq!(rf(&v["casimir"]), (Rf::v_pow(1) + Rf::v_pow(-1)) / (Rf::v_pow(1) - Rf::v_pow(-1)));
    assert_eq!(v["generators"]["l"], json!([["0", "0"], ["0", "1"]]));
    let dir = tempfile::tempdir().unwrap();
    let w = run_json(&["weights", "--module", "L-(3,01)"]);
    assert_eq!(w.as_array().unwrap().len(), 6);
    let mut rows = w.as_array().unwrap().clone();
    rows.extend(run_json(&["weights", "--module", "L-(1,0)"]).as_array().unwrap().iter().cloned());
    let path = dir.path().join("w.json");
    fs::write(&path, Value::Array(rows).to_string()).unwrap();
    let d = run_json(&["rep", "--decompose", path.to_str().unwrap()]);
    let names: Vec<&str> = d["decomposition"].as_array().unwrap().iter().map(|x| x["module"].as_str().unwrap()).collect();
    assert_eq!(names, ["L-(1,0)", "L-(3,01)"]);
}

#[test]
fn weights_csv() {
    let out = run(&["weights", "--d", "2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("sign,a,eps,mult"));
    let total: u64 = lines.map(|l| l.rsplit(',').next().unwrap().parse::<u64>().unwrap()).sum();
    assert_eq!(total, 13);
}

#[test]
fn sw_check_reports() {
    let v = run_json(&["sw-check", "--d", "2"]);
    assert_eq!(v["conjecture_match"], true);
    assert_eq!(v["status"], "conjecture-consistent");
    assert_eq!(v["total_dim"], 13);
    assert_eq!(v["decomposition"], v["predicted"]);
    assert!(v["weights"].is_array());
}

#[test]
fn output_is_deterministic() {
    for args in [&["sw-check", "--d", "3"][..], &["rep", "--module", "L+(2,01)"], &["normalize", "--word", "e l f f e"]] {
        assert_eq!(run(args).stdout, run(args).stdout);
    }
}
