//! Browser bindings: chord diagrams on a circle, their weights, and the
//! associator.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use superchord::diagrams::{slit_close, ChordDiagram, Component, Kind, SlitMode};
use superchord::kontsevich::{build_associator, MAX_ASSOCIATOR_DEGREE};
use superchord::liesuper::{build_gl, casimir_tensor, defining};
use superchord::kontsevich::horizontal::Elem;
use superchord::scalars::Rational;
use superchord::weightsys::{wlg, ws_link};

/// Reads a chord word such as `0 1 0 1`: labels in order around the circle.
fn parse_circle(text: &str) -> Result<ChordDiagram, String> {
    let labels: Vec<u16> = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<u16>().map_err(|_| format!("not a chord label: {s:?}")))
        .collect::<Result<_, _>>()?;
    if labels.len() > 12 {
        return Err("at most 6 chords".into());
    }
    let d = ChordDiagram::new(vec![Component { kind: Kind::Circle, slots: labels }]).map_err(|e| e.to_string())?;
    Ok(d.canonical())
}

fn evaluate_inner(text: &str, alpha: &str) -> Result<Value, String> {
    let d = parse_circle(text)?;
    let mut gl = serde_json::Map::new();
    for (name, m, n) in [("gl(1|1)", 1, 1), ("gl(2|1)", 2, 1)] {
        let g = build_gl(m, n).map_err(|e| e.to_string())?;
        let t = casimir_tensor(&g).map_err(|e| e.to_string())?;
        let v = defining::<Rational>(&g);
        gl.insert(name.into(), json!(ws_link(&t, &v, &d).map_err(|e| e.to_string())?.to_string()));
    }
    let slots = d.components()[0].slots.clone();
    let points = slots.len().max(1);
    let mut lg = Vec::new();
    for k in 0..points {
        let long = slit_close(&d, 0, SlitMode::Slit { point: k }).map_err(|e| e.to_string())?;
        lg.push(wlg(&long).map_err(|e| e.to_string())?);
    }
    let at = match alpha.trim() {
        "" => None,
        a => Some(a.parse::<Rational>().map_err(|e| e.to_string())?),
    };
    Ok(json!({
        "slots": slots,
        "degree": d.degree(),
        "isolated": d.has_isolated_chord(),
        "gl": gl,
        "lg": lg[0].to_string(),
        "lg_at": at.and_then(|a| lg[0].eval(&a)).map(|x| x.to_string()),
        "slit_independent": lg.windows(2).all(|w| w[0] == w[1]),
    }))
}

/// Weights of a circle diagram: gl(1|1) and gl(2|1) on the defining module,
/// and the Links–Gould weight of the diagram slit open.
#[wasm_bindgen]
pub fn evaluate(text: &str, alpha: &str) -> String {
    match evaluate_inner(text, alpha) {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

fn word_name(w: &[u8]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(|&g| if g == 0 { "a" } else { "b" }).collect()
}

fn associator_inner(order: usize) -> Result<Value, String> {
    if order > MAX_ASSOCIATOR_DEGREE {
        return Err(format!("order is capped at {MAX_ASSOCIATOR_DEGREE}"));
    }
    let a = build_associator(order).map_err(|e| e.to_string())?;
    let terms = |e: &Elem| -> Vec<Value> {
        let mut v: Vec<_> = e.iter().collect();
        v.sort_by(|x, y| x.0.len().cmp(&y.0.len()).then(x.0.cmp(y.0)));
        v.into_iter().map(|(w, c)| json!([word_name(w), c.to_string()])).collect()
    };
    Ok(json!({
        "order": order,
        "c2": a.c2().to_string(),
        "log": terms(a.log()),
        "phi": terms(a.phi()),
        "solved": a.residuals().iter().all(|r| r.is_empty()),
    }))
}

/// Associator through `order` as words in `a = t12`, `b = t23`.
#[wasm_bindgen]
pub fn associator(order: usize) -> String {
    match associator_inner(order) {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}
