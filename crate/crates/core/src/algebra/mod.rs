//! Exact scalar and matrix arithmetic over the complexified field Q(√2, √3),
//! with Laurent dependence on m, ω and ħ.

pub mod ext;
pub mod json;
pub mod matrix;
pub mod rational;
pub mod sym;

pub use ext::ExtScalar;
pub use matrix::SymMatrix;
pub use rational::Rational;
pub use sym::{Exponents, SymScalar};

/// Levi-Civita symbol on zero-based indices.
pub fn levi_civita(i: usize, j: usize, k: usize) -> i64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

pub fn kronecker(i: usize, j: usize) -> i64 {
    i64::from(i == j)
}
