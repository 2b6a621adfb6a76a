//! WebAssembly demo of the teaching engine.
//!
//! Every export takes plain arguments and returns a JSON string, so the
//! page needs no generated bindings beyond strings and numbers. The same
//! functions are available natively (see [`demo`]) and are tested there.

pub mod demo;

use wasm_bindgen::prelude::*;

fn js(r: Result<String, String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

/// Runs a P3 program with a step-by-step trace of at most `trace_limit`
/// states.
#[wasm_bindgen]
pub fn p3_run(program: &str, input: &str, step_limit: u32, trace_limit: u32) -> Result<String, JsValue> {
    js(demo::p3_run(program, input, step_limit as u64, trace_limit as usize))
}

/// All four protocols and both metrics on a fixture graph:
/// `figure1`, `separation:s:t:k` or `random:reps:wits:p` (seeded).
#[wasm_bindgen]
pub fn teach_fixture(name: &str, seed: u32) -> Result<String, JsValue> {
    js(demo::teach_fixture(name, seed as u64))
}

/// All four protocols and both metrics on an `OCG v1` graph text.
#[wasm_bindgen]
pub fn teach_ocg(text: &str) -> Result<String, JsValue> {
    js(demo::teach_ocg(text))
}

/// Tables 1–3 for one DNF domain, e.g. `("3term", "max5", "desc")`.
#[wasm_bindgen]
pub fn dnf_summary(variant: &str, spec: &str, tiebreak: &str) -> Result<String, JsValue> {
    js(demo::dnf_summary(variant, spec, tiebreak))
}

/// Parses a DNF formula and reports its size, truth table and the
/// witnesses it is consistent with.
#[wasm_bindgen]
pub fn dnf_formula(formula: &str) -> Result<String, JsValue> {
    js(demo::dnf_formula(formula))
}

/// Exhaustive projection-matrix search (`k * n <= 20`).
#[wasm_bindgen]
pub fn conjecture(k: u32, n: u32, q: u32) -> Result<String, JsValue> {
    js(demo::conjecture(k as usize, n as usize, q as usize))
}
