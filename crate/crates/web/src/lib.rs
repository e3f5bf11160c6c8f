//! wasm-bindgen entry points for the browser demo. Each returns a JSON
//! string `{ "exit_code": n, "result": <command JSON> }`, where the command
//! JSON is exactly what `curve-forge --json` prints.

use num_traits::ToPrimitive;
use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

use curve_forge::parse::parse_rational;
use curve_forge::poly::UniPoly;
use curve_forge::Rat;

fn call(args: &[&str]) -> Value {
    let out = curve_forge_cli::run(["curve-forge", "--json"].iter().chain(args));
    let result = serde_json::from_str(&out.stdout).unwrap_or_else(|_| json!({ "error": out.stderr.trim() }));
    json!({ "exit_code": out.code, "result": result })
}

/// Singular points of a curve in `X, Y, Z` (or affine `x, y`).
#[wasm_bindgen]
pub fn singular_points(curve: &str) -> String {
    call(&["singular", curve]).to_string()
}

/// Implicit equation of `x = x(t)`, `y = y(t)`.
#[wasm_bindgen]
pub fn implicitize(x: &str, y: &str) -> String {
    call(&["implicitize", "--x", x, "--y", y]).to_string()
}

fn eval_f64(p: &UniPoly<Rat>, t: f64) -> f64 {
    p.coeffs().iter().rev().fold(0.0, |acc, c| acc * t + c.to_f64().unwrap_or(f64::NAN))
}

/// `(x(t), y(t))` at `n` evenly spaced parameters in `[t0, t1]`, skipping
/// poles.
pub fn sample(x: &str, y: &str, t0: f64, t1: f64, n: u32) -> Option<Vec<[f64; 2]>> {
    let frac = |s: &str| {
        let (a, b) = parse_rational(&s.into(), &["t"]).ok()?;
        Some((a.to_uni(0)?, b.to_uni(0)?))
    };
    let ((xn, xd), (yn, yd)) = (frac(x)?, frac(y)?);
    let steps = n.max(2) - 1;
    Some(
        (0..=steps)
            .filter_map(|i| {
                let t = t0 + (t1 - t0) * f64::from(i) / f64::from(steps);
                let p = [eval_f64(&xn, t) / eval_f64(&xd, t), eval_f64(&yn, t) / eval_f64(&yd, t)];
                p.iter().all(|v| v.is_finite()).then_some(p)
            })
            .collect(),
    )
}

/// Split-degree parametrization of an affine curve, with `n` samples of
/// the parameter range `[t0, t1]` for plotting.
#[wasm_bindgen]
pub fn split_param(curve: &str, t0: f64, t1: f64, n: u32) -> String {
    let mut v = call(&["param", "split", curve]);
    if v["exit_code"] == 0 {
        let p = &v["result"]["payload"];
        let pts = sample(p["x"].as_str().unwrap_or(""), p["y"].as_str().unwrap_or(""), t0, t1, n);
        v["samples"] = json!(pts.unwrap_or_default());
    }
    v.to_string()
}
