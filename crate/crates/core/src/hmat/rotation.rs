//! The family `L_q ∘ R_θ` of left-translated real rotations.
//!
//! For `|q| = 1` and `sin θ ≠ 0` these are exactly the elements of Sp(2) with
//! infinitely many left eigenvalues. Their left spectrum is the 2-sphere
//! `{ q (cos θ + sin θ ω) : ω imaginary, |ω| = 1 }`, equivalently the unit
//! quaternions `σ` with `Re(conj(q) σ) = cos θ`.

use serde::{Deserialize, Serialize};

use super::{is_symplectic, symplectic_residual, MatH2};
use crate::error::{Error, Result};
use crate::quat::{re_dot, Quaternion, DEFAULT_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RotationForm {
    pub q: Quaternion,
    pub theta: f64,
}

impl RotationForm {
    pub fn new(q: Quaternion, theta: f64) -> Result<Self> {
        if !q.is_unit(DEFAULT_TOL) {
            return Err(Error::NonUnit { index: 0, norm: q.norm() });
        }
        Ok(Self { q, theta })
    }

    pub fn cos_theta(&self) -> f64 {
        self.theta.cos()
    }

    /// The same matrix written with `θ ∈ (0, π)`: `(q, -θ)` and `(-q, π - θ)`
    /// realize the same `L_q ∘ R_θ`.
    pub fn canonical(&self) -> Self {
        let (s, c) = self.theta.sin_cos();
        if s >= 0.0 {
            Self { q: self.q, theta: s.atan2(c) }
        } else {
            Self { q: -self.q, theta: (-s).atan2(-c) }
        }
    }

    /// Distance of `σ` from the eigenvalue sphere in the real-part condition,
    /// `|Re(conj(q) σ) - cos θ|`.
    pub fn sphere_gap(&self, sigma: Quaternion) -> f64 {
        (re_dot(self.q, sigma) - self.cos_theta()).abs()
    }
}

/// `[[q cos θ, -q sin θ], [q sin θ, q cos θ]]`.
pub fn rotation_matrix(f: &RotationForm) -> Result<MatH2> {
    if !f.q.is_unit(DEFAULT_TOL) {
        return Err(Error::NonUnit { index: 0, norm: f.q.norm() });
    }
    let (s, c) = f.theta.sin_cos();
    let qc = f.q.scale(c);
    let qs = f.q.scale(s);
    Ok(MatH2::new(qc, -qs, qs, qc))
}

/// Recover `(q, θ)` with `θ ∈ (0, π)` when `A = L_q ∘ R_θ`, `sin θ ≠ 0`.
///
/// Returns `Ok(None)` for every other symplectic matrix, including `±L_q`
/// (the `sin θ = 0` members, which have finite spectrum).
pub fn detect_rotation_form(a: &MatH2, tol: f64) -> Result<Option<RotationForm>> {
    if !is_symplectic(a, tol) {
        return Err(Error::NotSymplectic(symplectic_residual(a)));
    }
    let (a11, a12, a21, a22) = (a.a11(), a.a12(), a.a21(), a.a22());
    if a11.max_abs_diff(a22) > tol || a21.max_abs_diff(-a12) > tol {
        return Ok(None);
    }
    if a21.norm() <= tol {
        return Ok(None);
    }
    // a11 = q c and a21 = q s share a direction iff a11 conj(a21) = c s is real.
    if (a11 * a21.conj()).im().norm() > tol {
        return Ok(None);
    }
    let q = if a21.norm() >= a11.norm() {
        a21.scale(1.0 / a21.norm())
    } else {
        let dir = a11.scale(1.0 / a11.norm());
        if re_dot(dir, a21) < 0.0 {
            -dir
        } else {
            dir
        }
    };
    let cos = re_dot(q, a11);
    let sin = re_dot(q, a21);
    Ok(Some(RotationForm { q, theta: sin.atan2(cos) }))
}

/// `q (cos θ + sin θ ω)` for a unit imaginary `ω`.
pub fn eigen_sphere_point(f: &RotationForm, omega: Quaternion) -> Result<Quaternion> {
    if omega.t.abs() > DEFAULT_TOL || !omega.is_unit(DEFAULT_TOL) {
        return Err(Error::NotUnitImaginary { re: omega.t, norm: omega.norm() });
    }
    let (s, c) = f.theta.sin_cos();
    Ok(f.q * (Quaternion::real(c) + omega.scale(s)))
}
