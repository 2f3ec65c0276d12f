//! Heisenberg-algebra polynomials and the second-order reduction of the
//! oscillator-coupled first-order systems.

mod poly;
mod reduce;

pub use poly::{monomial_product, Monomial, OperatorPolynomial};
pub use reduce::{
    closed_form_second_order, l_dot_s, oscillator_substitute, reduce_to_second_order, spin_orbit_decompose,
    Coupling, SpinOrbitForm,
};
