//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Each export has a plain Rust twin returning `Result<String, String>` so
//! the logic is testable without a JavaScript host.

use bihook::crystal::f_ab;
use bihook::fock::{canonical_row, Convention};
use bihook::structure::{predict, Query};
use bihook::{Bipartition, QuantumCharacteristic};
use wasm_bindgen::prelude::*;

/// Largest shape the page will send to the LLT routine.
pub const ROW_SIZE_LIMIT: usize = 12;

pub fn structure_text(e: u32, p: u32, k: u32, j: u32, a: u32, b: u32, transpose: bool) -> Result<String, String> {
    let q = Query { e, p: p as u64, k, j, a, b, transpose };
    predict(&q).map(|v| v.to_string()).map_err(|x| x.to_string())
}

pub fn structure_json(e: u32, p: u32, k: u32, j: u32, a: u32, b: u32, transpose: bool) -> Result<String, String> {
    let q = Query { e, p: p as u64, k, j, a, b, transpose };
    let v = predict(&q).map_err(|x| x.to_string())?;
    serde_json::to_string_pretty(&v).map_err(|x| x.to_string())
}

pub fn induce_label(e: u32, a: u32, b: u32, negate: bool, shape: &str) -> Result<String, String> {
    let la: Bipartition = shape.trim().parse().map_err(|x: bihook::Error| x.to_string())?;
    let e = QuantumCharacteristic::new(e).map_err(|x| x.to_string())?;
    f_ab(&la, a, b, e, negate).map(|x| x.to_string()).map_err(|x| x.to_string())
}

/// The nonzero graded decomposition numbers in the row of `shape`, one
/// `label  entry` pair per line.
pub fn llt_row_text(e: u32, shape: &str) -> Result<String, String> {
    let la: Bipartition = shape.trim().parse().map_err(|x: bihook::Error| x.to_string())?;
    if la.size() > ROW_SIZE_LIMIT {
        return Err(format!("shapes above {ROW_SIZE_LIMIT} boxes are too slow for the page"));
    }
    let e = QuantumCharacteristic::new(e).map_err(|x| x.to_string())?;
    let row = canonical_row(&la, e, Convention::Codegree).map_err(|x| x.to_string())?;
    Ok(row.iter().map(|(mu, c)| format!("D({mu})  {c}\n")).collect())
}

#[wasm_bindgen]
#[allow(clippy::too_many_arguments)]
pub fn structure(e: u32, p: u32, k: u32, j: u32, a: u32, b: u32, transpose: bool, json: bool) -> Result<String, JsError> {
    let out = if json { structure_json(e, p, k, j, a, b, transpose) } else { structure_text(e, p, k, j, a, b, transpose) };
    out.map_err(|x| JsError::new(&x))
}

#[wasm_bindgen]
pub fn induce(e: u32, a: u32, b: u32, negate: bool, shape: &str) -> Result<String, JsError> {
    induce_label(e, a, b, negate, shape).map_err(|x| JsError::new(&x))
}

#[wasm_bindgen]
pub fn llt_row(e: u32, shape: &str) -> Result<String, JsError> {
    llt_row_text(e, shape).map_err(|x| JsError::new(&x))
}
