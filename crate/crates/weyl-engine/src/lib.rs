//! Weyl group machinery: the finite Weyl group as integer matrices, the
//! extended affine Weyl group with its alcove length function and canonical
//! reduced words over `S_aff ∪ Ω`, minimal coset representatives, Poincaré
//! polynomials, weak-order orbit diagrams and `Ω`-conjugation.

mod affine;
mod diagram;
mod error;
mod finite;

pub use affine::{poincare, AffineWeyl, AffineWord, ExtAffineElement, Rep};
pub use diagram::{weak_order_diagram, OrbitDiagram};
pub use error::WeylError;
pub use finite::{identity, mat_mul, mat_vec, reflection_matrix, transpose, Mat, WeylElement, WeylGroup};
