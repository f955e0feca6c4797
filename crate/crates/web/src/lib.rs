//! `wasm-bindgen` entry points for the browser demo. Every function takes
//! plain strings and numbers and returns a JSON document; failures are
//! reported as `{"error": "..."}` rather than thrown.

use eqset::cli::parse_linear_system;
use eqset::json::vec_to_json;
use eqset::lindio::analyze;
use eqset::wordeq::{brute_force_wordeq, encode_equation, parse_equation};
use eqset::Edt0lSystem;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Keeps a single call well under a second in the browser.
pub const MAX_BOUND: u32 = 32;
pub const MAX_WORD_CAP: u32 = 5;
pub const MAX_LENGTH_CAP: u32 = 64;
const DEPTH_CAP: usize = 32;

fn respond(result: Result<Value, String>) -> String {
    result.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

/// Solution set of `{"A": [[..]], "c": [..]}` with coordinates up to `bound`.
#[wasm_bindgen]
pub fn solve_linear(input: &str, bound: u32) -> String {
    respond((|| {
        let s = parse_linear_system(input)?;
        let a = analyze(&s).map_err(|e| e.to_string())?;
        let solutions: Vec<Value> = a
            .solutions(bound.min(MAX_BOUND).into())
            .iter()
            .map(vec_to_json)
            .collect();
        Ok(json!({
            "dim": s.dim(),
            "bound": bound.min(MAX_BOUND),
            "solvable": a.report.solvable,
            "infinite": a.report.infinite,
            "witness": a.report.witness.as_ref().map(vec_to_json),
            "states": a.automaton.states().len(),
            "arcs": a.automaton.arcs().len(),
            "solutions": solutions,
            "dot": a.automaton.to_dot(),
        }))
    })())
}

/// Solutions of a word equation up to length `cap`, and its polynomial system.
#[wasm_bindgen]
pub fn word_equation(equation: &str, cap: u32) -> String {
    respond((|| {
        let eq = parse_equation(equation).map_err(|e| e.to_string())?;
        let al = eq.alphabet();
        let solutions: Vec<String> = brute_force_wordeq(&eq, cap.min(MAX_WORD_CAP) as usize)
            .iter()
            .map(|s| s.render(al))
            .collect();
        let system = encode_equation(&eq)
            .map(|ps| ps.to_text())
            .map_err(|e| e.to_string());
        let mut out = json!({ "equation": eq.to_string(), "cap": cap.min(MAX_WORD_CAP), "solutions": solutions });
        match system {
            Ok(text) => out["system"] = json!(text),
            Err(e) => out["system_error"] = json!(e),
        }
        Ok(out)
    })())
}

/// Words of an EDT0L system (JSON) up to length `cap`.
#[wasm_bindgen]
pub fn edt0l_enumerate(input: &str, cap: u32) -> String {
    respond((|| {
        let sys = Edt0lSystem::from_json(input).map_err(|e| e.to_string())?;
        let en = sys
            .enumerate(cap.min(MAX_LENGTH_CAP) as usize, DEPTH_CAP)
            .map_err(|e| e.to_string())?;
        let words: Vec<String> = en.words.iter().map(|w| sys.render(w)).collect();
        Ok(json!({
            "words": words,
            "truncated": en.truncated,
            "empty": sys.is_empty(),
            "infinite": sys.is_language_infinite(),
            "dot": sys.automaton().to_dot(),
        }))
    })())
}
