//! End-to-end tests of the binary: output shapes, exit codes, and
//! byte-determinism of the machine-readable formats.

use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tanglespan"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, Output) {
    let out = run(args);
    let value = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "bad JSON from {args:?}: {e}\n{}",
            String::from_utf8_lossy(&out.stdout)
        )
    });
    (value, out)
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("tanglespan-test-{}-{name}", std::process::id()))
}

#[test]
fn rational_routes_agree_on_11_3() {
    let (v, out) = json(&["alex", "rational", "11/3", "--route", "all", "--json"]);
    assert!(out.status.success());
    assert_eq!(v["schema"], 1);
    assert_eq!(v["input"], "b(11,3)");
    assert_eq!(v["agree"], true);
    let routes = v["routes"].as_array().unwrap();
    assert_eq!(routes.len(), 2);
    for route in routes {
        assert_eq!(route["delta"]["min_deg"], 0);
        let coeffs: Vec<&str> = route["delta"]["coeffs"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| c.as_str().unwrap())
            .collect();
        assert_eq!(coeffs, ["1", "-3", "3", "-3", "1"]);
        assert_eq!(route["determinant"], "11");
    }
}

#[test]
fn pretzel_routes_agree_on_9_11() {
    let (v, out) = json(&["alex", "pretzel", "2,1,1,1,-5", "--route", "all", "--json"]);
    assert!(out.status.success());
    let routes = v["routes"].as_array().unwrap();
    assert_eq!(routes.len(), 3);
    for route in routes {
        let coeffs: Vec<&str> = route["delta"]["coeffs"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| c.as_str().unwrap())
            .collect();
        assert_eq!(coeffs, ["1", "-5", "7", "-7", "7", "-5", "1"]);
        assert_eq!(route["determinant"], "33");
    }
}

#[test]
fn layer_word_tangle_matches_the_rational_route() {
    let form = tanglespan::tangle::rational_2bridge_expr(11, 3).unwrap();
    let parity = match form.parity {
        tanglespan::tangle::Parity::Even => "even",
        tanglespan::tangle::Parity::Odd => "odd",
    };
    let word = form.expr.to_string();
    let (v, out) = json(&["alex", "tangle", &word, "--parity", parity, "--json"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let routes = v["routes"].as_array().unwrap();
    assert_eq!(routes.len(), 1);
    assert_eq!(routes[0]["determinant"], "11");
    let coeffs: Vec<&str> = routes[0]["delta"]["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .collect();
    assert_eq!(coeffs, ["1", "-3", "3", "-3", "1"]);
}

#[test]
fn classify_reports_fraction_slope_and_curve_point() {
    let spec = tanglespan::tangle::RationalSpec::new(2, 1).unwrap();
    let expr = tanglespan::tangle::rational_canonical_expr(spec).to_string();
    let (v, out) = json(&["classify", &expr, "--json"]);
    assert!(out.status.success());
    assert_eq!(v["fraction"], "2");
    assert_eq!(v["slope"], "-1/2");
    let coloring = &v["coloring"];
    assert_eq!(coloring["fraction"], "2");
    assert_eq!(coloring["on_curve"], true);
    assert_eq!(coloring["plucker"].as_array().unwrap().len(), 6);
}

#[test]
fn cf_normalizes_and_round_trips() {
    let (v, out) = json(&["cf", "11/3", "--json"]);
    assert!(out.status.success());
    assert_eq!(v["p"], 11);
    assert_eq!(v["q"], 8);
    assert_eq!(v["mirrored"], true);
    let cf: Vec<i64> = v["even_cf"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_i64().unwrap())
        .collect();
    assert_eq!(cf, [2, -2, 2, 2]);
    assert_eq!(v["value"], "11/8");
}

#[test]
fn exit_codes_separate_domain_and_verification_failures() {
    let link = run(&["alex", "rational", "4/2"]);
    assert_eq!(link.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&link.stderr).contains("not a knot"));

    let circle_fail = run(&["roots", "rational", "5/2", "--check", "circle"]);
    assert_eq!(circle_fail.status.code(), Some(2));

    let circle_pass = run(&["roots", "rational", "3/1", "--check", "circle"]);
    assert_eq!(circle_pass.status.code(), Some(0));

    let usage = run(&["alex", "bogus"]);
    assert_eq!(usage.status.code(), Some(1));

    let help = run(&["--help"]);
    assert_eq!(help.status.code(), Some(0));

    let version = run(&["--version"]);
    assert_eq!(version.status.code(), Some(0));
}

#[test]
fn verify_json_is_byte_identical_across_reruns_and_jobs() {
    let args = [
        "verify",
        "--family",
        "even-pretzel-2p",
        "--samples",
        "4",
        "--seed",
        "11",
        "--bound",
        "9",
        "--json",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let mut with_jobs: Vec<&str> = args.to_vec();
    with_jobs.extend(["--jobs", "3"]);
    let c = run(&with_jobs);
    assert_eq!(a.stdout, c.stdout);

    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["failures"], 0);
    assert_eq!(v["check"], "unit-circle");
    assert_eq!(v["details"].as_array().unwrap().len(), 4);
}

#[test]
fn roots_csv_has_a_quoted_id_per_root() {
    let path = temp_path("roots.csv");
    let out = run(&[
        "roots",
        "pretzel",
        "3,5,7",
        "--csv",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let csv = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "id,re,im,abs,residual");
    assert_eq!(lines.len(), 3);
    for line in &lines[1..] {
        assert!(line.starts_with("\"P(3,5,7)\","));
    }
}
