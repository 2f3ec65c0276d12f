use thiserror::Error;

use crate::spin_models::Spin;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("unsupported spin `{0}` (expected 1/2, 1 or 3/2)")]
    UnsupportedSpin(String),

    #[error("dimension mismatch in {op}: left is {left:?}, right is {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("`{operation}` is not defined for spin {spin}")]
    WrongSpin { operation: &'static str, spin: Spin },

    #[error("symbol `{0}` carries a negative exponent and was substituted with zero")]
    ZeroSubstitution(&'static str),

    #[error("malformed rational `{0}`")]
    MalformedRational(String),

    #[error("malformed matrix document: {0}")]
    MalformedMatrix(String),

    #[error("reduced operator does not have oscillator form: {0}")]
    NonzeroRemainder(String),

    #[error("first-order system lacks the block structure needed for elimination: {0}")]
    BlockStructure(String),

    #[error("invalid coupling j={j}, l={l}, s={s}")]
    InvalidCoupling { j: String, l: u32, s: String },

    #[error("invalid finite-difference configuration: {0}")]
    InvalidConfig(String),

    #[error("bisection failed: {0}")]
    Bisection(String),

    #[error("channel l={l} returned {found} eigenvalues, {needed} required")]
    UnmatchedLevels { l: u32, found: usize, needed: usize },
}
