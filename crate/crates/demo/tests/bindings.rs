use serde_json::{json, Value};
use superchord_demo::{associator, evaluate};

#[test]
fn crossed_pair() {
    let v: Value = serde_json::from_str(&evaluate("0 1 0 1", "3/2")).unwrap();
    assert_eq!(v["gl"]["gl(2|1)"], "1");
    assert_eq!(v["gl"]["gl(1|1)"], "0");
    assert_eq!(v["slit_independent"], true);
    assert_eq!(v["lg"], "2α + 2α^2");
    assert_eq!(v["lg_at"], "15/2");
}

#[test]
fn bad_input_reports_an_error() {
    for text in ["0 1 0", "0 x 0", "0 0 1 1 2 2 3 3 4 4 5 5 6 6"] {
        let v: Value = serde_json::from_str(&evaluate(text, "")).unwrap();
        assert!(v["error"].is_string(), "{text}");
    }
}

#[test]
fn associator_terms() {
    let v: Value = serde_json::from_str(&associator(2)).unwrap();
    assert_eq!(v["c2"], "1/24");
    assert_eq!(v["solved"], true);
    assert_eq!(v["phi"][0], json!(["1", "1"]));
    assert!(serde_json::from_str::<Value>(&associator(9)).unwrap()["error"].is_string());
}
