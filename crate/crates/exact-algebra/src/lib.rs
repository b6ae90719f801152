//! Exact coefficient arithmetic for spherical Hecke algebra computations.
//!
//! The coefficient ring is `Z[q^{±1/2}]`, represented by [`HalfPowerLaurent`].
//! Group-algebra elements over a cocharacter lattice are [`OrbitPolynomial`]s,
//! and polynomials in an auxiliary variable `X` are [`XPolynomial`]s.

mod error;
mod group_algebra;
mod json;
mod laurent;
mod xpoly;

pub use error::AlgebraError;
pub use group_algebra::{LatticeVector, OrbitPolynomial};
pub use json::{orbit_from_json, orbit_to_json};
pub use laurent::{gaussian_binomial, HalfPowerLaurent};
pub use xpoly::{Coefficient, Ring, XPolynomial};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
