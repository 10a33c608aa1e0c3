//! 2×2 quaternionic matrices and the compact symplectic group Sp(2).
//!
//! `ℍ²` is a right vector space: a matrix acts on column vectors from the
//! left and scalars act from the right, so `A (v λ) = (A v) λ`.

mod adjoint;
mod rotation;

pub use adjoint::{adjoint_det, complex_adjoint, is_left_eigenvalue, ComplexAdjoint, EIGEN_TOL};
pub use rotation::{detect_rotation_form, eigen_sphere_point, rotation_matrix, RotationForm};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quat::{random_gaussian, Quaternion, INVERSE_FLOOR};

/// Column pivot floor used when orthonormalizing random draws.
const GRAM_SCHMIDT_FLOOR: f64 = 1e-8;

/// A 2×2 quaternionic matrix, row-major. JSON: `[[q11, q12], [q21, q22]]`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct MatH2(pub [[Quaternion; 2]; 2]);

impl MatH2 {
    pub const IDENTITY: Self = Self([
        [Quaternion::ONE, Quaternion::ZERO],
        [Quaternion::ZERO, Quaternion::ONE],
    ]);

    pub const fn new(a11: Quaternion, a12: Quaternion, a21: Quaternion, a22: Quaternion) -> Self {
        Self([[a11, a12], [a21, a22]])
    }

    /// `diag(d1, d2)`.
    pub const fn diag(d1: Quaternion, d2: Quaternion) -> Self {
        Self::new(d1, Quaternion::ZERO, Quaternion::ZERO, d2)
    }

    /// The scalar matrix `σ I`.
    pub const fn scalar(s: Quaternion) -> Self {
        Self::diag(s, s)
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Quaternion {
        self.0[row][col]
    }

    pub fn a11(&self) -> Quaternion {
        self.0[0][0]
    }
    pub fn a12(&self) -> Quaternion {
        self.0[0][1]
    }
    pub fn a21(&self) -> Quaternion {
        self.0[1][0]
    }
    pub fn a22(&self) -> Quaternion {
        self.0[1][1]
    }

    fn map(&self, f: impl Fn(Quaternion) -> Quaternion) -> Self {
        Self([
            [f(self.0[0][0]), f(self.0[0][1])],
            [f(self.0[1][0]), f(self.0[1][1])],
        ])
    }

    fn zip(&self, other: &Self, f: impl Fn(Quaternion, Quaternion) -> Quaternion) -> Self {
        Self([
            [f(self.0[0][0], other.0[0][0]), f(self.0[0][1], other.0[0][1])],
            [f(self.0[1][0], other.0[1][0]), f(self.0[1][1], other.0[1][1])],
        ])
    }

    pub fn entries(&self) -> [Quaternion; 4] {
        [self.0[0][0], self.0[0][1], self.0[1][0], self.0[1][1]]
    }

    pub fn is_finite(&self) -> bool {
        self.entries().iter().all(|q| q.is_finite())
    }

    /// Entrywise left multiplication `s A` (equivalently `(s I) A`).
    pub fn left_scale(&self, s: Quaternion) -> Self {
        self.map(|a| s * a)
    }

    pub fn scale(&self, s: f64) -> Self {
        self.map(|a| a.scale(s))
    }

    /// `A - σ I`.
    pub fn shift(&self, sigma: Quaternion) -> Self {
        let mut m = *self;
        m.0[0][0] = m.0[0][0] - sigma;
        m.0[1][1] = m.0[1][1] - sigma;
        m
    }

    /// Largest entry norm.
    pub fn max_norm(&self) -> f64 {
        self.entries().iter().map(|q| q.norm()).fold(0.0, f64::max)
    }

    /// Largest coordinate difference over all entries.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.entries()
            .iter()
            .zip(other.entries())
            .map(|(a, b)| a.max_abs_diff(b))
            .fold(0.0, f64::max)
    }

    /// Inverse by block elimination, pivoting on the larger first-column entry.
    pub fn inverse(&self) -> Result<Self> {
        let [[a, b], [c, d]] = self.0;
        let scale = self.max_norm().max(f64::MIN_POSITIVE);
        let floor = INVERSE_FLOOR * scale;
        let swap = c.norm() > a.norm();
        let (a, b, c, d) = if swap { (c, d, a, b) } else { (a, b, c, d) };
        if a.norm() <= floor {
            return Err(Error::SingularMatrix(adjoint_det(self)));
        }
        let ai = a.inverse()?;
        let schur = d - c * ai * b;
        if schur.norm() <= floor {
            return Err(Error::SingularMatrix(adjoint_det(self)));
        }
        let si = schur.inverse()?;
        let ai_b_si = ai * b * si;
        let si_c_ai = si * c * ai;
        let inv = [
            [ai + ai_b_si * c * ai, -ai_b_si],
            [-si_c_ai, si],
        ];
        // Swapping rows of A swaps the columns of A⁻¹.
        Ok(if swap {
            Self([[inv[0][1], inv[0][0]], [inv[1][1], inv[1][0]]])
        } else {
            Self(inv)
        })
    }

    /// Apply to a column vector.
    pub fn apply(&self, v: [Quaternion; 2]) -> [Quaternion; 2] {
        [
            self.0[0][0] * v[0] + self.0[0][1] * v[1],
            self.0[1][0] * v[0] + self.0[1][1] * v[1],
        ]
    }
}

/// Row-by-column product with Hamilton products, `A B`.
pub fn mat_mul(a: &MatH2, b: &MatH2) -> MatH2 {
    let mut out = [[Quaternion::ZERO; 2]; 2];
    for (r, row) in out.iter_mut().enumerate() {
        for (c, entry) in row.iter_mut().enumerate() {
            *entry = a.0[r][0] * b.0[0][c] + a.0[r][1] * b.0[1][c];
        }
    }
    MatH2(out)
}

/// Conjugate transpose `A* = conj(A)ᵀ`.
pub fn dagger(a: &MatH2) -> MatH2 {
    MatH2::new(a.a11().conj(), a.a21().conj(), a.a12().conj(), a.a22().conj())
}

/// `max |A A* - I|` over entries (entry norm).
pub fn symplectic_residual(a: &MatH2) -> f64 {
    let p = mat_mul(a, &dagger(a));
    (p - MatH2::IDENTITY).max_norm()
}

/// `A A* = I` up to `tol` in the largest entry norm.
pub fn is_symplectic(a: &MatH2, tol: f64) -> bool {
    a.is_finite() && symplectic_residual(a) <= tol
}

/// Haar-distributed element of Sp(2), by Gram–Schmidt on the columns of a
/// Gaussian quaternionic matrix.
pub fn random_symplectic<R: Rng + ?Sized>(rng: &mut R) -> MatH2 {
    loop {
        let c1 = [random_gaussian(rng), random_gaussian(rng)];
        let c2 = [random_gaussian(rng), random_gaussian(rng)];
        if let Some(m) = orthonormalize_columns(c1, c2) {
            return m;
        }
    }
}

fn column_norm(v: [Quaternion; 2]) -> f64 {
    (v[0].norm_sqr() + v[1].norm_sqr()).sqrt()
}

/// Gram–Schmidt with right scalar coefficients: `w = c2 - v1 ⟨v1, c2⟩`,
/// where `⟨v, w⟩ = v* w`.
fn orthonormalize_columns(c1: [Quaternion; 2], c2: [Quaternion; 2]) -> Option<MatH2> {
    let n1 = column_norm(c1);
    if n1 < GRAM_SCHMIDT_FLOOR {
        return None;
    }
    let v1 = [c1[0].scale(1.0 / n1), c1[1].scale(1.0 / n1)];
    let h = v1[0].conj() * c2[0] + v1[1].conj() * c2[1];
    let w = [c2[0] - v1[0] * h, c2[1] - v1[1] * h];
    let n2 = column_norm(w);
    if n2 < GRAM_SCHMIDT_FLOOR * column_norm(c2).max(1.0) {
        return None;
    }
    let v2 = [w[0].scale(1.0 / n2), w[1].scale(1.0 / n2)];
    Some(MatH2::new(v1[0], v2[0], v1[1], v2[1]))
}

impl Add for MatH2 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.zip(&o, |a, b| a + b)
    }
}

impl Sub for MatH2 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self.zip(&o, |a, b| a - b)
    }
}

impl Neg for MatH2 {
    type Output = Self;
    fn neg(self) -> Self {
        self.map(|a| -a)
    }
}

impl Mul for MatH2 {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        mat_mul(&self, &o)
    }
}

impl fmt::Display for MatH2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[ {}   {} ]", self.a11(), self.a12())?;
        write!(f, "[ {}   {} ]", self.a21(), self.a22())
    }
}
