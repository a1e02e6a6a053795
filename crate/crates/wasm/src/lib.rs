//! wasm-bindgen entry points for the static demo page in `www/`.
//!
//! Inputs are either a built-in name or the text of a pair / crossed-set file;
//! outputs are the same plain-text reports the CLI prints.

use nichols::builtins::{self, Params};
use nichols::nichols::hilbert as hilbert_series;
use nichols::quandle::{self, CrossedSet};
use nichols::{io, rank2, BraidedPair, Error};
use wasm_bindgen::prelude::*;

fn err(e: Error) -> JsError {
    JsError::new(&e.to_string())
}

fn pair(input: &str) -> Result<BraidedPair, Error> {
    let name = input.trim();
    if builtins::BRAIDED_PAIRS.iter().any(|(n, _)| *n == name) {
        builtins::braided_pair(name, &Params::default())
    } else {
        io::parse_braided_pair(input)
    }
}

fn crossed_set(input: &str) -> Result<CrossedSet, Error> {
    builtins::crossed_set(input.trim()).or_else(|_| io::parse_crossed_set(input))
}

#[wasm_bindgen(start)]
pub fn start() {
    console_error_panic_hook::set_once();
}

/// Graded dimensions up to `max_degree`.
#[wasm_bindgen]
pub fn hilbert(input: &str, max_degree: usize) -> Result<String, JsError> {
    let bp = pair(input).map_err(err)?;
    Ok(hilbert_series(&bp, max_degree).to_string())
}

#[wasm_bindgen]
pub fn rank2(input: &str) -> Result<String, JsError> {
    let bp = pair(input).map_err(err)?;
    let q = bp.diagonal_matrix().ok_or_else(|| JsError::new("braiding is not diagonal"))?;
    if q.len() != 2 {
        return Err(JsError::new(&format!("need a two-dimensional pair, got {}", q.len())));
    }
    let a = rank2::analyze_best(&q).map_err(err)?;
    let cartan = rank2::cartan(&q).map_or_else(|_| "none".to_string(), |c| c.to_string());
    Ok(format!("{a}\ncartan: {cartan}"))
}

#[wasm_bindgen]
pub fn quandle_h2(input: &str, modulus: u32) -> Result<String, JsError> {
    if modulus < 2 {
        return Err(JsError::new("modulus must be at least 2"));
    }
    let x = crossed_set(input).map_err(err)?;
    let h = quandle::h2(&x, modulus);
    Ok(format!("factors: {h}\norder: {}", h.order()))
}

/// Built-in names, one per line.
#[wasm_bindgen]
pub fn builtin_names() -> String {
    builtins::BRAIDED_PAIRS.iter().map(|(n, _)| *n).collect::<Vec<_>>().join("\n")
}
