//! wasm-bindgen surface for the static demo page. Every export takes a graph
//! description and returns a JSON string; the plain `*_json` functions carry
//! the logic so they can be tested natively.

use lss_core::graph::parse_graph6;
use lss_core::poly::{initial_form, lss_generators, weight_from_pmd};
use lss_core::reports::{properties_at, threshold_ladder, Invariants, Property};
use lss_core::{pmd, Budget, Family, Graph};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// The browser has no wall clock budget, so nodes are the only limit.
const NODES: u64 = 200_000;
const MAX_N: usize = 12;

/// Accepts a family (`star:3`), graph6, or 1-based pairs like `1-2, 2-3 3-4`.
pub fn parse_graph(spec: &str) -> Result<Graph, String> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Err("empty graph".into());
    }
    if let Ok(f) = Family::parse(spec) {
        return f.build().map_err(|e| e.to_string());
    }
    if spec.contains('-') {
        let mut pairs = Vec::new();
        for tok in spec.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let (a, b) = tok.split_once('-').ok_or_else(|| format!("bad edge {tok:?}"))?;
            let a: usize = a.parse().map_err(|_| format!("bad vertex in {tok:?}"))?;
            let b: usize = b.parse().map_err(|_| format!("bad vertex in {tok:?}"))?;
            if a == 0 || b == 0 {
                return Err(format!("vertices are 1-based: {tok:?}"));
            }
            pairs.push((a - 1, b - 1));
        }
        let n = pairs.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0);
        return Graph::new(n, pairs).map_err(|e| e.to_string());
    }
    parse_graph6(spec).map_err(|e| e.to_string())
}

fn guarded(spec: &str) -> Result<Graph, String> {
    let g = parse_graph(spec)?;
    if g.n() > MAX_N {
        return Err(format!("the demo handles at most {MAX_N} vertices"));
    }
    Ok(g)
}

fn edges_json(g: &Graph) -> Value {
    json!(g.edges().iter().map(|e| [e.0 + 1, e.1 + 1]).collect::<Vec<_>>())
}

pub fn decompose_json(spec: &str) -> Result<String, String> {
    let g = guarded(spec)?;
    let r = pmd(&g, Budget::nodes(NODES)).map_err(|e| e.to_string())?;
    let v = json!({
        "n": g.n(),
        "edges": edges_json(&g),
        "delta": g.max_degree(),
        "k": g.degeneracy().0,
        "alpha": g.alpha(),
        "result": r.to_json(),
    });
    Ok(v.to_string())
}

pub fn ladder_json(spec: &str) -> Result<String, String> {
    let g = guarded(spec)?;
    let inv = Invariants::compute(&g, Budget::nodes(NODES)).map_err(|e| e.to_string())?;
    let ladder = threshold_ladder(&inv);
    let top = ladder.iter().filter_map(|t| t.from_d).max().unwrap_or(1) + 1;
    let grid: Vec<Value> = (1..=top)
        .map(|d| {
            let r = properties_at(&inv, d);
            json!({ "d": d, "guaranteed": Property::ALL.iter().filter(|&&p| r.guaranteed(p)).map(|p| p.name()).collect::<Vec<_>>() })
        })
        .collect();
    let named: Vec<Value> = ladder
        .iter()
        .map(|t| json!({ "property": t.property.name(), "from_d": t.from_d, "rules": t.rules }))
        .collect();
    Ok(json!({ "invariants": inv, "n": g.n(), "edges": edges_json(&g), "ladder": named, "grid": grid }).to_string())
}

pub fn initial_forms_json(spec: &str, d: Option<usize>) -> Result<String, String> {
    let g = guarded(spec)?;
    let r = pmd(&g, Budget::nodes(NODES)).map_err(|e| e.to_string())?;
    let d = d.unwrap_or(r.value).max(1);
    let w = weight_from_pmd(&r.decomposition, d).map_err(|e| e.to_string())?;
    let rows: Vec<Value> = lss_generators(&g, d)
        .into_iter()
        .map(|(e, f)| {
            json!({
                "edge": [e.0 + 1, e.1 + 1],
                "part": r.decomposition.part_of(e).map(|l| l + 1),
                "generator": f.to_string(),
                "initial_form": initial_form(&f, &w).to_string(),
            })
        })
        .collect();
    let weights: Vec<Value> = w.iter().map(|(v, x)| json!([v.to_string(), x.to_string()])).collect();
    Ok(json!({ "d": d, "pmd": r.value, "exact": r.is_exact(), "n": g.n(), "edges": edges_json(&g), "forms": rows, "weights": weights }).to_string())
}

fn js(r: Result<String, String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn decompose(spec: &str) -> Result<String, JsValue> {
    js(decompose_json(spec))
}

#[wasm_bindgen]
pub fn ladder(spec: &str) -> Result<String, JsValue> {
    js(ladder_json(spec))
}

/// `d = 0` means "use pmd".
#[wasm_bindgen]
pub fn initial_forms(spec: &str, d: usize) -> Result<String, JsValue> {
    js(initial_forms_json(spec, (d > 0).then_some(d)))
}
