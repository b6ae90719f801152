//! The Satake transform on spherical Hecke algebras: Macdonald's formula for
//! split groups, transform tables (with recorded constants for the unitary
//! group), triangular inversion, Satake and Hecke polynomials, transposition,
//! and reduction modulo `q^{1/2} − 1`.

mod error;
mod hecke;
mod polynomial;
mod transform;

pub use error::SatakeError;
pub use hecke::HeckeCombination;
pub use polynomial::{hecke_polynomial, minuscule_satake_poly, required_budget, satake_poly_from_monomials};
pub use transform::{
    central_shift, macdonald, modq_check, naive_lift, orbit_decomposition, orbit_sum, q_delta, satake_inverse,
    transpose, EntrySource, TransformTable,
};
