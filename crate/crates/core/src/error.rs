use thiserror::Error;

use crate::rational::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("index {index} out of range (expected {expected})")]
    IndexOutOfRange { index: usize, expected: String },

    #[error("omega vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("N must be positive")]
    ZeroRank,

    #[error("algebra is not a Lie algebra: Jacobi residual {0}")]
    InvalidAlgebra(Rational),

    #[error("operation requires a Cayley-Klein algebra built by build_su_omega/build_u_omega")]
    NotCayleyKlein,

    #[error("cochain dimension {got} does not match algebra dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("cochain is not a two-cocycle ({violations} Jacobi equations violated)")]
    NotCocycle { violations: usize },

    #[error("basic coefficient constraint violated: {0}")]
    Constraint(String),

    #[error("cocycle disagrees with the derived extension relations: {0}")]
    DerivedRelation(String),

    #[error("no trivializing cochain: omega_{0} = 0 but alpha_{0} != 0")]
    NonTrivialTypeII(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
