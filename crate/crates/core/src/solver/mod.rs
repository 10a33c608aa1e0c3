//! Symplectic matrices with up to four prescribed left eigenvalues.
//!
//! Given unit quaternions `σ₁..σ₄`, look for `A = L_q ∘ R_θ`. By the real-part
//! description of its eigenvalue sphere, `σ_m` is a left eigenvalue exactly
//! when `Re(conj(q) σ_m) = cos θ`, i.e. `M q = cos θ · u` where the rows of `M`
//! are the coordinates of the `σ_m` and `u = (1, 1, 1, 1)`.
//!
//! * `rank M < 4`: take `cos θ = 0`, `θ = π/2`, and `q` a unit kernel vector.
//! * `rank M = 4`: `v = M⁻¹ u` has `‖v‖ > 1` (unit rows give `‖M w‖ < 2 ‖w‖`),
//!   so `cos θ = 1/‖v‖ ∈ (0, 1)` and `q = cos θ · v` is a unit quaternion.
//!
//! Fewer than four inputs are accepted; the system then always has a kernel
//! and the first branch applies. That case goes beyond the four-value
//! statement and is provided as an extension.

mod linalg;

pub use linalg::{
    bound_check, dot, norm, rank_and_kernel, solve_linear, BoundCheck, RankKernel, RealMatrix,
    RANK_TOL,
};

use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hmat::{adjoint_det, rotation_matrix, MatH2, RotationForm};
use crate::quat::{re_dot, Quaternion, DEFAULT_TOL};

/// Coordinates `(t, x, y, z)` as a real 4-vector.
pub fn coords(q: Quaternion) -> [f64; 4] {
    q.coords()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    RankDeficient,
    FullRank,
}

/// Per-input diagnostics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Residual {
    pub index: usize,
    pub sigma: Quaternion,
    /// `|Re(conj(q) σ) - cos θ|`
    pub eigen_residual: f64,
    /// `adjoint_det(A - σ I)` for each of the two matrices.
    pub margins: [f64; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstructionResult {
    pub branch: Branch,
    pub rank: usize,
    pub q: Quaternion,
    pub cos_theta: f64,
    pub theta: f64,
    /// `L_q ∘ R_θ` and `L_q ∘ R_{-θ}` (the latter written as `L_{-q} ∘ R_{π-θ}`).
    pub matrices: [MatH2; 2],
    pub residuals: Vec<Residual>,
}

impl ConstructionResult {
    pub fn forms(&self) -> [RotationForm; 2] {
        let first = RotationForm { q: self.q, theta: self.theta };
        let second = RotationForm { q: self.q, theta: -self.theta }.canonical();
        [first, second]
    }

    pub fn max_eigen_residual(&self) -> f64 {
        self.residuals.iter().map(|r| r.eigen_residual).fold(0.0, f64::max)
    }

    pub fn max_margin(&self) -> f64 {
        self.residuals
            .iter()
            .flat_map(|r| r.margins)
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// The real system matrix with rows `coords(σ_m)`.
pub fn system_matrix(sigmas: &[Quaternion]) -> Result<RealMatrix> {
    let rows: Vec<[f64; 4]> = sigmas.iter().map(|&s| coords(s)).collect();
    RealMatrix::from_rows(&rows)
}

fn check_inputs(sigmas: &[Quaternion]) -> Result<()> {
    if sigmas.is_empty() || sigmas.len() > 4 {
        return Err(Error::SigmaCount(sigmas.len()));
    }
    for (index, s) in sigmas.iter().enumerate() {
        if !s.is_finite() || !s.is_unit(DEFAULT_TOL) {
            return Err(Error::NonUnit { index, norm: s.norm() });
        }
    }
    Ok(())
}

/// Build `A ∈ Sp(2)` having every input as a left eigenvalue.
pub fn construct(sigmas: &[Quaternion]) -> Result<ConstructionResult> {
    check_inputs(sigmas)?;
    let m = system_matrix(sigmas)?;
    let rk = rank_and_kernel(&m, RANK_TOL);

    let (branch, q, cos_theta, theta) = if rk.rank < 4 {
        let q = Quaternion::from_coords(&rk.kernel[0]);
        (Branch::RankDeficient, q, 0.0, FRAC_PI_2)
    } else {
        let v = solve_linear(&m, &[1.0; 4])
            .map_err(|e| Error::Numerical(format!("rank 4 system failed to solve: {e}")))?;
        let vn = norm(&v);
        if !(vn > 1.0 + 1e-12) {
            return Err(Error::Numerical(format!(
                "‖M⁻¹u‖ = {vn} does not exceed 1 for a full-rank unit-row system"
            )));
        }
        let cos_theta = 1.0 / vn;
        let q = Quaternion::from_coords(&v).scale(cos_theta);
        (Branch::FullRank, q, cos_theta, cos_theta.acos())
    };

    let first = RotationForm { q, theta };
    let second = RotationForm { q, theta: -theta }.canonical();
    let matrices = [rotation_matrix(&first)?, rotation_matrix(&second)?];

    let residuals = sigmas
        .iter()
        .enumerate()
        .map(|(index, &sigma)| Residual {
            index,
            sigma,
            eigen_residual: (re_dot(q, sigma) - cos_theta).abs(),
            margins: [
                adjoint_det(&matrices[0].shift(sigma)),
                adjoint_det(&matrices[1].shift(sigma)),
            ],
        })
        .collect();

    Ok(ConstructionResult { branch, rank: rk.rank, q, cos_theta, theta, matrices, residuals })
}
