use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use superchord::harness::VerifyReport;
use superchord::kontsevich::ZValue;
use superchord::scalars::{AlphaScalar, HSeries, Rational, Ring};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superchord")).args(args).output().expect("spawn")
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = run(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn lg_of_trefoil() {
    let out = run(&["lg", "--word", "trefoil.tw", "--order", "3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("h^0  1"));
    let v = json(&["lg", "--word", "trefoil.tw", "--order", "3"]);
    let s = HSeries::<AlphaScalar>::from_json(&v).unwrap();
    assert!(s.coeff(0).is_one());
    assert_eq!(s.to_json(), v);
}

#[test]
fn verify_fourterm_passes() {
    let out = run(&["verify", "fourterm", "--degree", "3"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let v = json(&["verify", "fourterm", "--degree", "3"]);
    let r: VerifyReport = serde_json::from_value(v.clone()).unwrap();
    assert!(r.passed());
    assert_eq!(r.to_json(), v);
}

#[test]
fn v_alpha_trefoil_is_zero() {
    let v = json(&["wz", "--algebra", "gl2_1", "--rep", "v_alpha", "--word", "trefoil.tw", "--order", "3"]);
    assert!(HSeries::<AlphaScalar>::from_json(&v).unwrap().is_zero());
}

#[test]
fn z_roundtrip() {
    let v = json(&["z", "--word", "figure8.tw", "--order", "2"]);
    let z = ZValue::from_json(&v).unwrap();
    assert_eq!(z.order(), 2);
    assert_eq!(ZValue::from_json(&z.to_json()).unwrap(), z);
}

#[test]
fn ws_on_diagram_files() {
    let circle = scratch("crossed_circle.cd", r#"{"components": [{"kind": "circle", "slots": 4}], "chords": [[[0, 0], [0, 2]], [[0, 1], [0, 3]]]}"#);
    let long = scratch("crossed_interval.cd", r#"{"components": [{"kind": "interval", "slots": 4}], "chords": [[[0, 0], [0, 2]], [[0, 1], [0, 3]]]}"#);
    let ws = |alg: &str, p: &PathBuf| Rational::from_json(&json(&["ws", "--algebra", alg, "--diagram", p.to_str().unwrap()])).unwrap();
    assert_eq!(ws("gl2_1", &circle), Rational::one());
    assert_eq!(ws("gl1_1", &circle), Rational::zero());
    assert_eq!(ws("gl1_1", &long), Rational::one());
    let lg = json(&["ws", "--rep", "v_alpha", "--diagram", long.to_str().unwrap()]);
    let x = AlphaScalar::from_json(&lg).unwrap();
    let at = json(&["ws", "--rep", "v-alpha", "--alpha", "3/2", "--diagram", long.to_str().unwrap()]);
    assert_eq!(x.eval(&Rational::new(3, 2)), Some(Rational::from_json(&at).unwrap()));
}

#[test]
fn rt_with_bundled_data() {
    let v = json(&["rt", "--word", "trefoil.tw", "--ribbon", "jones_q2.ribbon"]);
    assert_eq!(Rational::from_json(&v).unwrap(), Rational::new(335, 8));
}

#[test]
fn usage_errors_exit_nonzero() {
    for args in [
        &["frobnicate"][..],
        &["verify", "nosuch"],
        &["verify", "fourterm", "--degree", "9"],
        &["lg", "--word", "/nonexistent/x.tw"],
        &["lg", "--word", "hopf.tw"],
        &["ws", "--algebra", "gl2", "--diagram", "x.cd"],
    ] {
        let out = run(args);
        assert!(!out.status.success(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}
