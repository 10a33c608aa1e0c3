//! Browser demo: prescribe left eigenvalues, scan eigenvalue margins over a
//! slice of S³, and follow the Cayley contraction of Ω(σ).
//!
//! Everything crosses the JS boundary as JSON strings or flat `f64` arrays;
//! the page in `www/` does the drawing.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use wasm_bindgen::prelude::*;

use sympleig::hmat::{adjoint_det, MatH2};
use sympleig::quat::{random_unit, re_dot, Quaternion};
use sympleig::solver::{construct, ConstructionResult};
use sympleig::topology::{cayley_trace, PathPoint};

#[derive(Serialize)]
struct ConstructView {
    result: ConstructionResult,
    /// Each input written as `conj(q) σ = cos θ + sin θ ω`; these are the `ω`.
    omegas: Vec<Quaternion>,
}

fn parse<T: for<'de> serde::Deserialize<'de>>(s: &str, what: &str) -> Result<T, String> {
    serde_json::from_str(s).map_err(|e| format!("malformed {what}: {e}"))
}

pub fn construct_view(sigmas_json: &str) -> Result<String, String> {
    let sigmas: Vec<Quaternion> = parse(sigmas_json, "sigmas")?;
    let result = construct(&sigmas).map_err(|e| e.to_string())?;
    let (sin, cos) = result.theta.sin_cos();
    let omegas = sigmas
        .iter()
        .map(|&s| (result.q.conj() * s - Quaternion::real(cos)).scale(1.0 / sin))
        .collect();
    serde_json::to_string(&ConstructView { result, omegas }).map_err(|e| e.to_string())
}

/// Point of S³ at angles `(alpha, beta)` on the 2-sphere slice fixed by `gamma`:
/// `(cos α, sin α cos β, sin α sin β cos γ, sin α sin β sin γ)`.
pub fn slice_point(alpha: f64, beta: f64, gamma: f64) -> Quaternion {
    let (sa, ca) = alpha.sin_cos();
    let (sb, cb) = beta.sin_cos();
    let (sg, cg) = gamma.sin_cos();
    Quaternion::new(ca, sa * cb, sa * sb * cg, sa * sb * sg)
}

/// `log10 adjoint_det(A - σI)` on an `nx × ny` grid, `α ∈ [0, π]` along rows,
/// `β ∈ [0, 2π)` along columns. Row-major.
pub fn margin_grid_values(matrix_json: &str, gamma: f64, nx: usize, ny: usize) -> Result<Vec<f64>, String> {
    let a: MatH2 = parse(matrix_json, "matrix")?;
    let mut out = Vec::with_capacity(nx * ny);
    for r in 0..ny {
        let alpha = std::f64::consts::PI * (r as f64 + 0.5) / ny as f64;
        for c in 0..nx {
            let beta = std::f64::consts::TAU * c as f64 / nx as f64;
            let m = adjoint_det(&a.shift(slice_point(alpha, beta, gamma)));
            out.push(m.max(1e-300).log10());
        }
    }
    Ok(out)
}

#[derive(Serialize)]
struct TraceView {
    path: Vec<PathPoint>,
    /// Largest entry distance from `-σI` at each step.
    distance_to_end: Vec<f64>,
}

pub fn cayley_view(matrix_json: &str, sigma_json: &str, steps: usize) -> Result<String, String> {
    let a: MatH2 = parse(matrix_json, "matrix")?;
    let s: Quaternion = parse(sigma_json, "sigma")?;
    let path = cayley_trace(&a, s, steps).map_err(|e| e.to_string())?;
    let end = MatH2::scalar(-s);
    let distance_to_end = path.iter().map(|p| (p.matrix - end).max_norm()).collect();
    serde_json::to_string(&TraceView { path, distance_to_end }).map_err(|e| e.to_string())
}

/// Four uniform unit quaternions, deterministic per seed.
pub fn random_sigmas_json(seed: u64) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s: Vec<Quaternion> = (0..4).map(|_| random_unit(&mut rng)).collect();
    serde_json::to_string(&s).unwrap_or_default()
}

/// `Re(conj(q) σ)`, exposed for the page's tooltip.
#[wasm_bindgen]
pub fn real_part_condition(q_json: &str, sigma_json: &str) -> Result<f64, JsError> {
    let q: Quaternion = parse(q_json, "q").map_err(|e| JsError::new(&e))?;
    let s: Quaternion = parse(sigma_json, "sigma").map_err(|e| JsError::new(&e))?;
    Ok(re_dot(q, s))
}

#[wasm_bindgen(js_name = construct)]
pub fn construct_js(sigmas_json: &str) -> Result<String, JsError> {
    construct_view(sigmas_json).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = marginGrid)]
pub fn margin_grid_js(matrix_json: &str, gamma: f64, nx: usize, ny: usize) -> Result<Vec<f64>, JsError> {
    margin_grid_values(matrix_json, gamma, nx, ny).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = cayley)]
pub fn cayley_js(matrix_json: &str, sigma_json: &str, steps: usize) -> Result<String, JsError> {
    cayley_view(matrix_json, sigma_json, steps).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = randomSigmas)]
pub fn random_sigmas_js(seed: u32) -> String {
    random_sigmas_json(seed as u64)
}
