//! Zeta-element verdicts for pushforwards of fundamental classes.
//!
//! The Hecke polynomial `ℌ_c` of a preset is evaluated at the Frobenius
//! ([`tilde_hecke`]), restricted to each class `α = Hσ_αK` of its support
//! ([`class_degrees`]), and the degree of each restriction is tested for membership in
//! `d_α·𝒪`, where `d_α` is the index of the layer subgroup in the stabilizer
//! ([`layer_indices`], [`zeta_verdict`]).

mod degrees;
mod error;
mod tilde;
mod verdict;

pub use degrees::{class_degrees, class_degrees_of, layer_indices, ClassDegree, LayerChoice};
pub use error::ZetaError;
pub use tilde::{tilde_hecke, TildeHecke, TildeTerm};
pub use verdict::{judge, layer_at_prime, zeta_verdict, ClassVerdict, ZetaVerdict};
