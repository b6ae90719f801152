//! Errors raised while assembling zeta verdicts.

use thiserror::Error;

/// Failures of the zeta checker.
#[derive(Debug, Error)]
pub enum ZetaError {
    /// The preset has no mixed-degree data for this check.
    #[error("no zeta-element data for preset {0}")]
    Unsupported(String),
    /// A degree contains an odd power of `q^{1/2}`, so membership in `d·𝒪` is not defined.
    #[error("class {class}: degree has an odd power of q^(1/2) (half-exponent {half}); the parity of c is wrong")]
    OddHalfPower {
        /// The class label.
        class: String,
        /// The offending half-exponent.
        half: i64,
    },
    /// Satake inversion failed.
    #[error(transparent)]
    Satake(#[from] satake::SatakeError),
    /// A coset table could not be built.
    #[error(transparent)]
    Decompose(#[from] coset_decomposer::DecomposeError),
    /// Exact arithmetic failed.
    #[error(transparent)]
    Algebra(#[from] exact_algebra::AlgebraError),
}
