use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("quaternion with norm {0:e} is not invertible")]
    NotInvertible(f64),

    #[error("input {index}: quaternion has norm {norm}, expected a unit quaternion")]
    NonUnit { index: usize, norm: f64 },

    #[error("expected a unit imaginary quaternion, got real part {re} and norm {norm}")]
    NotUnitImaginary { re: f64, norm: f64 },

    #[error("matrix is not symplectic (residual {0:e})")]
    NotSymplectic(f64),

    #[error("matrix is singular (adjoint determinant {0:e})")]
    SingularMatrix(f64),

    #[error("linear system is singular: pivot {pivot:e} below threshold {threshold:e}")]
    SingularSystem { pivot: f64, threshold: f64 },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("expected between 1 and 4 quaternions, got {0}")]
    SigmaCount(usize),

    #[error("bound hypotheses fail: {0}")]
    BoundPrecondition(String),

    #[error("Cayley path undefined at t = {t}: denominator adjoint determinant {det:e}")]
    PathUndefined { t: f64, det: f64 },

    #[error("path parameter t = {0} outside [0, 1]")]
    PathParameter(f64),

    #[error("numerical inconsistency: {0}")]
    Numerical(String),
}

impl Error {
    /// Internal assertion failures as opposed to bad inputs.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::Numerical(_))
    }
}
