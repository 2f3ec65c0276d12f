//! First-order (linearized) Schrödinger equations for spin 1/2, 1 and 3/2.
//!
//! * [`algebra`]: exact arithmetic over Q(√2, √3)[i] with Laurent
//!   dependence on m, ω, ħ.
//! * [`spin_models`]: spin and auxiliary matrices and the block operators
//!   `A`, `B_i`, `C`, `η` of each first-order system.
//! * [`identities`]: exact checks of the algebraic identities the systems
//!   rely on.
//! * [`heisenberg`]: normal-ordered operator polynomials and the reduction
//!   of the oscillator-coupled systems to second-order Hamiltonians.
//! * [`spectrum`]: the resulting level formula and a finite-difference
//!   cross-check.
//! * [`cli`]: the `linwave` command-line interface.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod heisenberg;
pub mod identities;
pub mod spectrum;
pub mod spin_models;

pub use error::{Error, Result};
pub use spin_models::{build_model, Spin, SpinModel};
