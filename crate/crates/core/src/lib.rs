//! Exact construction and second cohomology of the Cayley-Klein quasi-unitary
//! Lie algebras `su_ω(N+1)` and `u_ω(N+1)`.
//!
//! The crate is split in three layers:
//!
//! * [`algebra`], [`ck`], [`matrix`]: structure-constant tensors over exact
//!   rationals, the CK bracket table and its fundamental matrix realization.
//! * [`linalg`] and [`cohomology`]: a generic `H²(g, ℚ)` solver for any
//!   finite-dimensional Lie algebra (cocycle system, coboundary map, exact
//!   nullspace, quotient representatives).
//! * [`extensions`]: the Type I/II/III description of every central extension
//!   of the CK families, the closed dimension formula and its verification.

pub mod algebra;
pub mod ck;
pub mod cohomology;
pub mod error;
pub mod extensions;
pub mod format;
pub mod generator;
pub mod linalg;
pub mod matrix;
pub mod omega;
pub mod rational;

pub use algebra::LieAlgebra;
pub use ck::{build_su_omega, build_u_omega, Family};
pub use cohomology::{h2, CohomologyResult, OneCochain, TwoCochain};
pub use error::{Error, Result};
pub use extensions::{classify, BasicCoefficients, ExtensionClassification};
pub use generator::Generator;
pub use linalg::SparseMatrix;
pub use omega::OmegaVector;
pub use rational::Rational;
