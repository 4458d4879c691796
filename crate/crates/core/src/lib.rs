//! Exact elementary number theory on arbitrary-precision integers.

pub mod arithfun;
pub mod contfrac;
pub mod error;
pub mod farey;
pub mod intcore;
pub mod modular;
pub mod perm;
pub mod qform;
pub mod quadres;

pub use error::{Error, Result};
pub use intcore::Rational;
