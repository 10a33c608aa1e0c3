//! Quaternion arithmetic over `f64`.
//!
//! Coordinates are stored scalar-first as `(t, x, y, z)`, i.e. the quaternion
//! `t + x i + y j + z k`. The JSON form is the array `[t, x, y, z]`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance used by predicates on unit-scale quantities.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Quaternions with norm below this are treated as non-invertible.
pub const INVERSE_FLOOR: f64 = 1e-12;

/// A real quaternion `t + x i + y j + z k`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 4]", into = "[f64; 4]")]
pub struct Quaternion {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl From<[f64; 4]> for Quaternion {
    fn from(c: [f64; 4]) -> Self {
        Self::new(c[0], c[1], c[2], c[3])
    }
}

impl From<Quaternion> for [f64; 4] {
    fn from(q: Quaternion) -> Self {
        q.coords()
    }
}

impl From<f64> for Quaternion {
    fn from(t: f64) -> Self {
        Self::real(t)
    }
}

impl Quaternion {
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Self = Self::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Self = Self::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Self = Self::new(0.0, 0.0, 0.0, 1.0);

    #[inline]
    pub const fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        Self { t, x, y, z }
    }

    #[inline]
    pub const fn real(t: f64) -> Self {
        Self::new(t, 0.0, 0.0, 0.0)
    }

    /// Coordinates in `(t, x, y, z)` order.
    #[inline]
    pub const fn coords(self) -> [f64; 4] {
        [self.t, self.x, self.y, self.z]
    }

    #[inline]
    pub fn from_coords(c: &[f64]) -> Self {
        Self::new(c[0], c[1], c[2], c[3])
    }

    /// Scalar part.
    #[inline]
    pub fn re(self) -> f64 {
        self.t
    }

    /// Imaginary part `x i + y j + z k`.
    #[inline]
    pub fn im(self) -> Self {
        Self::new(0.0, self.x, self.y, self.z)
    }

    #[inline]
    pub fn conj(self) -> Self {
        Self::new(self.t, -self.x, -self.y, -self.z)
    }

    #[inline]
    pub fn norm_sqr(self) -> f64 {
        self.t * self.t + self.x * self.x + self.y * self.y + self.z * self.z
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn is_finite(self) -> bool {
        self.t.is_finite() && self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// `|norm(q) - 1| <= tol`.
    pub fn is_unit(self, tol: f64) -> bool {
        (self.norm() - 1.0).abs() <= tol
    }

    #[inline]
    pub fn scale(self, s: f64) -> Self {
        Self::new(self.t * s, self.x * s, self.y * s, self.z * s)
    }

    /// Multiplicative inverse `conj(q) / |q|^2`.
    pub fn inverse(self) -> Result<Self> {
        let n2 = self.norm_sqr();
        if !(n2.sqrt() > INVERSE_FLOOR) {
            return Err(Error::NotInvertible(self.norm()));
        }
        Ok(self.conj().scale(1.0 / n2))
    }

    /// `q / |q|`; fails on (near) zero input.
    pub fn normalized(self) -> Result<Self> {
        let n = self.norm();
        if !(n > INVERSE_FLOOR) {
            return Err(Error::NotInvertible(n));
        }
        Ok(self.scale(1.0 / n))
    }

    /// Maximum absolute coordinate difference.
    pub fn max_abs_diff(self, other: Self) -> f64 {
        let d = self - other;
        d.t.abs().max(d.x.abs()).max(d.y.abs()).max(d.z.abs())
    }
}

/// Hamilton product `p q`.
#[inline]
pub fn mul(p: Quaternion, q: Quaternion) -> Quaternion {
    Quaternion::new(
        p.t * q.t - p.x * q.x - p.y * q.y - p.z * q.z,
        p.t * q.x + p.x * q.t + p.y * q.z - p.z * q.y,
        p.t * q.y - p.x * q.z + p.y * q.t + p.z * q.x,
        p.t * q.z + p.x * q.y - p.y * q.x + p.z * q.t,
    )
}

/// `Re(conj(p) q)`, which is the Euclidean dot product of the coordinate vectors.
#[inline]
pub fn re_dot(p: Quaternion, q: Quaternion) -> f64 {
    p.t * q.t + p.x * q.x + p.y * q.y + p.z * q.z
}

/// Two quaternions are conjugate (`q = w p w⁻¹` for some `w`) exactly when they
/// share norm and real part.
pub fn similar(p: Quaternion, q: Quaternion, tol: f64) -> bool {
    (p.norm() - q.norm()).abs() <= tol && (p.re() - q.re()).abs() <= tol
}

/// Uniform sample on the unit sphere S³ (normalized Gaussian 4-vector).
pub fn random_unit<R: Rng + ?Sized>(rng: &mut R) -> Quaternion {
    loop {
        let q = random_gaussian(rng);
        let n = q.norm();
        if n > INVERSE_FLOOR {
            return q.scale(1.0 / n);
        }
    }
}

/// Quaternion with i.i.d. standard normal coordinates.
pub fn random_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Quaternion {
    Quaternion::new(
        rng.sample(StandardNormal),
        rng.sample(StandardNormal),
        rng.sample(StandardNormal),
        rng.sample(StandardNormal),
    )
}

/// Uniform unit imaginary quaternion (a point on the 2-sphere of `ω` with `ω² = -1`).
pub fn random_unit_imaginary<R: Rng + ?Sized>(rng: &mut R) -> Quaternion {
    loop {
        let v = Quaternion::new(
            0.0,
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
        );
        let n = v.norm();
        if n > INVERSE_FLOOR {
            return v.scale(1.0 / n);
        }
    }
}

impl Add for Quaternion {
    type Output = Self;
    #[inline]
    fn add(self, o: Self) -> Self {
        Self::new(self.t + o.t, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Quaternion {
    type Output = Self;
    #[inline]
    fn sub(self, o: Self) -> Self {
        Self::new(self.t - o.t, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Quaternion {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.t, -self.x, -self.y, -self.z)
    }
}

impl Mul for Quaternion {
    type Output = Self;
    #[inline]
    fn mul(self, o: Self) -> Self {
        mul(self, o)
    }
}

impl Mul<f64> for Quaternion {
    type Output = Self;
    #[inline]
    fn mul(self, s: f64) -> Self {
        self.scale(s)
    }
}

impl Mul<Quaternion> for f64 {
    type Output = Quaternion;
    #[inline]
    fn mul(self, q: Quaternion) -> Quaternion {
        q.scale(self)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // values that round to zero print as +0
        let sign = |v: f64| if v < -5e-7 { '-' } else { '+' };
        write!(
            f,
            "{:.6} {} {:.6}i {} {:.6}j {} {:.6}k",
            self.t,
            sign(self.x),
            self.x.abs(),
            sign(self.y),
            self.y.abs(),
            sign(self.z),
            self.z.abs()
        )
    }
}
