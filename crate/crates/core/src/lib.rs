//! Symplectic 2×2 quaternionic matrices with prescribed left eigenvalues.
//!
//! * [`quat`]: quaternion arithmetic and predicates.
//! * [`hmat`]: 2×2 quaternionic matrices, Sp(2), the rotation family
//!   `L_q ∘ R_θ`, and the complex-adjoint invertibility oracle.
//! * [`solver`]: the construction of a symplectic matrix having up to four
//!   given unit quaternions as left eigenvalues, plus its real linear algebra.
//! * [`topology`]: the sets `Ω(σ)`, the Cayley contraction, and covering
//!   experiments over Sp(2).

// `!(x <= tol)` is used on purpose so NaN fails every check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod hmat;
pub mod quat;
pub mod solver;
pub mod topology;

pub use error::{Error, Result};
pub use hmat::MatH2;
pub use quat::Quaternion;
