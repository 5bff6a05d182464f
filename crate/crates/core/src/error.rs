use thiserror::Error;

/// Errors raised by the exact and numeric routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("series constant term is not invertible (factor out powers of z first)")]
    NotInvertible,

    #[error("parameters are not coprime: {0}")]
    NotCoprime(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("pole at s = {0}")]
    Pole(f64),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("series does not converge: {0}")]
    Convergence(String),

    #[error("unknown identity id `{0}`")]
    UnknownIdentity(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
