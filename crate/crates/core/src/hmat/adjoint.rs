//! Complex adjoint representation and the invertibility oracle.
//!
//! Writing `q = a + b j` with `a = t + x i`, `b = y + z i`, the map
//! `q ↦ [[a, b], [-conj(b), conj(a)]]` is an injective ring homomorphism
//! `ℍ → M₂(ℂ)`. Applied blockwise it sends a quaternionic 2×2 matrix to a
//! 4×4 complex matrix whose determinant is real, non-negative, and zero
//! exactly when the quaternionic matrix is singular.

use num_complex::Complex64;

use super::MatH2;
use crate::quat::Quaternion;

/// Default threshold on `adjoint_det(A - σI)` for left-eigenvalue decisions.
pub const EIGEN_TOL: f64 = 1e-8;

pub type ComplexAdjoint = [[Complex64; 4]; 4];

fn block(q: Quaternion) -> [[Complex64; 2]; 2] {
    let a = Complex64::new(q.t, q.x);
    let b = Complex64::new(q.y, q.z);
    [[a, b], [-b.conj(), a.conj()]]
}

pub fn complex_adjoint(m: &MatH2) -> ComplexAdjoint {
    let mut out = [[Complex64::new(0.0, 0.0); 4]; 4];
    for r in 0..2 {
        for c in 0..2 {
            let blk = block(m.get(r, c));
            for i in 0..2 {
                for j in 0..2 {
                    out[2 * r + i][2 * c + j] = blk[i][j];
                }
            }
        }
    }
    out
}

/// Determinant by LU with partial pivoting.
pub(crate) fn complex_det(mut m: ComplexAdjoint) -> Complex64 {
    let n = 4;
    let mut det = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let p = (k..n)
            .max_by(|&a, &b| m[a][k].norm().total_cmp(&m[b][k].norm()))
            .unwrap_or(k);
        if m[p][k].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if p != k {
            m.swap(p, k);
            det = -det;
        }
        let pivot = m[k][k];
        det *= pivot;
        for r in k + 1..n {
            let f = m[r][k] / pivot;
            if f.norm() == 0.0 {
                continue;
            }
            let (upper, lower) = m.split_at_mut(r);
            for (x, &v) in lower[0][k + 1..].iter_mut().zip(&upper[k][k + 1..]) {
                *x -= f * v;
            }
        }
    }
    det
}

/// Determinant of the complex adjoint of `A`.
///
/// Degree-4 homogeneous in the entries: `adjoint_det(c A) = |c|⁴ adjoint_det(A)`
/// for real `c`, and `adjoint_det(diag(c, 1)) = |c|²`.
pub fn adjoint_det(m: &MatH2) -> f64 {
    let d = complex_det(complex_adjoint(m));
    debug_assert!(
        d.im.abs() <= 1e-8 * d.re.abs().max(m.max_norm().powi(4)).max(1.0),
        "complex adjoint determinant has imaginary residue {:e}",
        d.im
    );
    d.re
}

/// `σ` is a left eigenvalue of `A` (`A v = σ v`, `v ≠ 0`) iff `A - σ I` is singular.
pub fn is_left_eigenvalue(a: &MatH2, sigma: Quaternion, tol: f64) -> bool {
    adjoint_det(&a.shift(sigma)) <= tol
}
