use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument is outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A modular inverse was requested for a non-unit.
    #[error("{value} is not invertible modulo {modulus} (gcd = {gcd})")]
    NotInvertible {
        value: BigInt,
        modulus: BigInt,
        gcd: BigInt,
    },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// An internal consistency check failed. Seeing this is a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub(crate) fn internal(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}
