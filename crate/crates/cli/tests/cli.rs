use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bernkdv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.push("--json");
    let out = run(&a);
    assert!(out.status.success(), "{:?}: {}", args, String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn passes(doc: &Value) -> (usize, usize) {
    let recs = doc["records"].as_array().unwrap();
    let checks: Vec<bool> = recs.iter().filter_map(|r| r["pass"].as_bool()).collect();
    (checks.iter().filter(|&&p| p).count(), checks.len())
}

#[test]
fn bernoulli_twelve_by_two_routes() {
    let doc = json(&["bernoulli", "12", "--route", "oracle,tangent"]);
    let recs = doc["records"].as_array().unwrap();
    assert_eq!(recs.len(), 2);
    for r in recs {
        assert_eq!(r["value"], "-691/2730");
    }
    assert_eq!(doc["summary"]["agree"], true);
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["version"], env!("CARGO_PKG_VERSION"));
}

#[test]
fn odd_bernoulli_by_tangent_is_zero() {
    let doc = json(&["bernoulli", "3", "--route", "tangent"]);
    assert_eq!(doc["records"][0]["value"], "0/1");
}

#[test]
fn bernoulli_four_by_quadrature() {
    let doc = json(&["bernoulli", "4", "--route", "quadrature"]);
    let r = &doc["records"][0];
    let v: f64 = r["value"]["value"].as_str().unwrap().parse().unwrap();
    assert_eq!(r["value"]["digits"], 17);
    assert!((v + 1.0 / 30.0).abs() < 1e-12, "{v}");
    assert_eq!(doc["tolerances"]["quadrature_relative"], "1e-10");
}

#[test]
fn verify_suites_pass() {
    for (args, expect) in [
        (vec!["verify", "eq1", "--max-m", "4"], 4),
        (vec!["verify", "eq12", "--max-n", "20"], 20),
        (vec!["verify", "lemma1", "--order", "12"], 13),
        (vec!["verify", "lemma2", "--max-n", "20"], 19),
        (vec!["verify", "alpha2", "--max-m", "8"], 8),
        (vec!["verify", "parts", "--max-m", "8"], 8),
        (vec!["verify", "ode14", "--order", "10"], 21),
    ] {
        let doc = json(&args);
        assert_eq!(passes(&doc), (expect, expect), "{args:?}");
    }
}

#[test]
fn tangent_four_coefficients() {
    let doc = json(&["tangent", "4"]);
    let c: Vec<&str> = doc["records"][0]["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(c, ["0/1", "16/1", "0/1", "-40/1", "0/1", "24/1"]);
}

#[test]
fn faulhaber_two() {
    let doc = json(&["faulhaber", "2"]);
    assert_eq!(doc["records"][0]["alphas"], serde_json::json!(["-1/3", "4/3"]));
}

#[test]
fn first_density_is_u_squared() {
    let doc = json(&["kdv-density", "0"]);
    assert_eq!(doc["records"][0]["terms"], serde_json::json!([[[2], "1/1"]]));
    assert_eq!(doc["records"][1]["pass"], true);
}

#[test]
fn bh_at_rational_invariants() {
    let doc = json(&["bh", "2", "--g2", "5", "--g3", "-7"]);
    assert_eq!(doc["records"][0]["value"], "2/1");
    assert_eq!(doc["records"][1]["value"], "-36/1");
}

#[test]
fn bell_reports_lattice() {
    let doc = json(&["bell", "2", "--omega1", "1", "--omega2-im", "1.3"]);
    assert!(doc["summary"]["g2"]["value"].is_string());
    assert!(doc["records"][0]["nodes"].as_u64().unwrap() >= 16);
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        vec!["report", "--max-m", "4", "--json"],
        vec!["bernoulli", "20", "--route", "oracle,tangent,kdv,quadrature"],
        vec!["bell", "3", "--json"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["verify", "nonsense"],
        vec!["bernoulli", "100000"],
        vec!["bernoulli", "5", "--route", "quadrature"],
        vec!["bernoulli", "1", "--route", "tangent"],
        vec!["bell", "1"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn insufficient_precision_is_reported_as_failure() {
    let out = run(&["bernoulli", "4", "--route", "quadrature", "--precision-bits", "24"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("precision"));
}

#[test]
fn help_lists_default_tolerances() {
    let out = run(&["--help"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("1e-10"));
}
