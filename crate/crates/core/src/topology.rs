//! The open sets `Ω(σ) = { A ∈ Sp(2) : A - σI invertible }`, their Cayley
//! contraction, and covering experiments.
//!
//! Membership uses the same adjoint-determinant threshold as
//! [`is_left_eigenvalue`](crate::hmat::is_left_eigenvalue), so `A ∉ Ω(σ)`
//! and "`σ` is a left eigenvalue of `A`" agree for every input.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hmat::{
    adjoint_det, is_symplectic, random_symplectic, symplectic_residual, MatH2, EIGEN_TOL,
};
use crate::quat::{Quaternion, DEFAULT_TOL};
use crate::solver::construct;

/// Default membership threshold on `adjoint_det(A - σI)`.
pub const OMEGA_THRESHOLD: f64 = EIGEN_TOL;

/// Symplectic tolerance for inputs to this module.
const INPUT_SYMPLECTIC_TOL: f64 = 1e-8;

/// Below this the Cayley denominator is treated as singular.
const PATH_DET_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OmegaMargin {
    pub sigma: Quaternion,
    pub margin: f64,
    pub member: bool,
}

fn check_sigma(sigma: Quaternion, index: usize) -> Result<()> {
    if sigma.is_finite() && sigma.is_unit(DEFAULT_TOL) {
        Ok(())
    } else {
        Err(Error::NonUnit { index, norm: sigma.norm() })
    }
}

fn check_symplectic(a: &MatH2) -> Result<()> {
    if is_symplectic(a, INPUT_SYMPLECTIC_TOL) {
        Ok(())
    } else {
        Err(Error::NotSymplectic(symplectic_residual(a)))
    }
}

pub fn omega_margin(a: &MatH2, sigma: Quaternion, threshold: f64) -> Result<OmegaMargin> {
    check_symplectic(a)?;
    check_sigma(sigma, 0)?;
    let margin = adjoint_det(&a.shift(sigma));
    Ok(OmegaMargin { sigma, margin, member: margin > threshold })
}

/// Cayley contraction of `Ω(σ)` onto `-σI`:
///
/// `A_t = ((1+t) A - (1-t) σ I) · ((1+t) I - (1-t) σ̄ A)⁻¹`, `t ∈ [0, 1]`.
///
/// For `t > 0` the denominator is always invertible; `t = 0` returns `-σI`
/// when `A - σI` is invertible and errors otherwise.
pub fn cayley_path(a: &MatH2, sigma: Quaternion, t: f64) -> Result<MatH2> {
    check_symplectic(a)?;
    check_sigma(sigma, 0)?;
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::PathParameter(t));
    }
    if t == 0.0 {
        // At t = 0 the denominator is -σ̄ (A - σI).
        let det = adjoint_det(&a.shift(sigma));
        if det < PATH_DET_FLOOR {
            return Err(Error::PathUndefined { t, det });
        }
        return Ok(MatH2::scalar(-sigma));
    }
    let (p, m) = (1.0 + t, 1.0 - t);
    let numer = a.scale(p) - MatH2::scalar(sigma.scale(m));
    let denom = MatH2::scalar(Quaternion::real(p)) - a.left_scale(sigma.conj()).scale(m);
    let det = adjoint_det(&denom);
    if det < PATH_DET_FLOOR {
        return Err(Error::PathUndefined { t, det });
    }
    Ok(numer * denom.inverse()?)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PathPoint {
    pub t: f64,
    pub matrix: MatH2,
    /// `adjoint_det(A_t - σI)`
    pub margin: f64,
    pub symplectic_residual: f64,
}

/// Sample the path at `t = 1 - k/steps`, `k = 0..=steps`, from `A` to `-σI`.
pub fn cayley_trace(a: &MatH2, sigma: Quaternion, steps: usize) -> Result<Vec<PathPoint>> {
    if steps == 0 {
        return Err(Error::Dimension("at least one step is required".into()));
    }
    (0..=steps)
        .map(|k| {
            let t = if k == steps { 0.0 } else { 1.0 - k as f64 / steps as f64 };
            let matrix = cayley_path(a, sigma, t)?;
            Ok(PathPoint {
                t,
                margin: adjoint_det(&matrix.shift(sigma)),
                symplectic_residual: symplectic_residual(&matrix),
                matrix,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UncoveredSample {
    pub index: usize,
    pub matrix: MatH2,
    pub margins: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoverReport {
    pub sigmas: Vec<Quaternion>,
    pub samples: usize,
    pub threshold: f64,
    /// `None` when the samples were supplied by the caller.
    pub seed: Option<u64>,
    pub uncovered: Vec<UncoveredSample>,
    /// Smallest, over samples, of the largest per-σ margin.
    pub min_best_margin: f64,
}

/// The `index`-th sample of a covering experiment. Each index has its own
/// ChaCha stream, so samples do not depend on evaluation order.
pub fn sample_matrix(seed: u64, index: usize) -> MatH2 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    random_symplectic(&mut rng)
}

fn margins_for(a: &MatH2, sigmas: &[Quaternion]) -> Vec<f64> {
    sigmas.iter().map(|&s| adjoint_det(&a.shift(s))).collect()
}

fn check_sigmas(sigmas: &[Quaternion]) -> Result<()> {
    if sigmas.is_empty() {
        return Err(Error::SigmaCount(0));
    }
    sigmas.iter().enumerate().try_for_each(|(i, &s)| check_sigma(s, i))
}

struct SampleOutcome {
    best: f64,
    uncovered: Option<UncoveredSample>,
}

fn evaluate(index: usize, a: MatH2, sigmas: &[Quaternion], threshold: f64) -> SampleOutcome {
    let margins = margins_for(&a, sigmas);
    let best = margins.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let uncovered = (best <= threshold).then_some(UncoveredSample { index, matrix: a, margins });
    SampleOutcome { best, uncovered }
}

fn assemble(
    sigmas: &[Quaternion],
    samples: usize,
    threshold: f64,
    seed: Option<u64>,
    outcomes: Vec<SampleOutcome>,
) -> CoverReport {
    let min_best_margin = outcomes.iter().map(|o| o.best).fold(f64::INFINITY, f64::min);
    let uncovered = outcomes.into_iter().filter_map(|o| o.uncovered).collect();
    CoverReport { sigmas: sigmas.to_vec(), samples, threshold, seed, uncovered, min_best_margin }
}

#[cfg(feature = "parallel")]
fn map_indices<T: Send>(n: usize, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn map_indices<T: Send>(n: usize, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
    (0..n).map(f).collect()
}

/// Check which of the given matrices lie outside every `Ω(σ)`.
pub fn cover_matrices(sigmas: &[Quaternion], matrices: &[MatH2], threshold: f64) -> Result<CoverReport> {
    check_sigmas(sigmas)?;
    matrices.iter().try_for_each(check_symplectic)?;
    let outcomes = map_indices(matrices.len(), |i| evaluate(i, matrices[i], sigmas, threshold));
    Ok(assemble(sigmas, matrices.len(), threshold, None, outcomes))
}

/// Draw `samples` Haar-random elements of Sp(2) and report those outside
/// every `Ω(σ)`. The report is identical for any thread schedule.
pub fn cover_experiment(
    sigmas: &[Quaternion],
    samples: usize,
    seed: u64,
    threshold: f64,
) -> Result<CoverReport> {
    check_sigmas(sigmas)?;
    if samples == 0 {
        return Err(Error::Dimension("at least one sample is required".into()));
    }
    let outcomes = map_indices(samples, |i| evaluate(i, sample_matrix(seed, i), sigmas, threshold));
    Ok(assemble(sigmas, samples, threshold, Some(seed), outcomes))
}

/// A symplectic matrix lying in none of `Ω(σ₁), …, Ω(σ₄)`.
pub fn never_cover_witness(sigmas: &[Quaternion; 4]) -> Result<MatH2> {
    Ok(construct(sigmas)?.matrices[0])
}

/// The four basis units plus `(i + j)/√2`.
pub fn five_sigmas() -> [Quaternion; 5] {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    [
        Quaternion::ONE,
        Quaternion::I,
        Quaternion::J,
        Quaternion::K,
        Quaternion::new(0.0, r, r, 0.0),
    ]
}
