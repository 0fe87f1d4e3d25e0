use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument violated a documented precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A matrix expected to be Hermitian was not, within tolerance.
    #[error("not Hermitian: {0}")]
    NotHermitian(String),

    /// A decomposition expected to be permutation-symmetric was not.
    #[error("not permutation-symmetric: {0}")]
    NotSymmetric(String),

    /// Requested problem size exceeds the supported desk-scale limits.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// A radial coefficient vector must have b_0 = 1 to describe a unit-trace state.
    #[error("normalization: {0}")]
    Normalization(String),

    /// A numerical routine failed to meet its accuracy contract.
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// Two independent checks that must agree did not; indicates a bug or a
    /// tolerance chosen too close to the noise floor.
    #[error("internal disagreement: {0}")]
    Disagreement(String),

    /// Malformed text input.
    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
