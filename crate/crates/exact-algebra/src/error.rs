//! Error type shared by the exact-arithmetic routines.

use thiserror::Error;

/// Failures of exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    /// An exact division was requested but the divisor does not divide the dividend.
    #[error("exact division left a nonzero remainder")]
    NonzeroRemainder,
    /// The divisor of an exact division is zero.
    #[error("division by zero")]
    DivisionByZero,
    /// A residue at `q = -1` was requested for an element containing an odd power of `q^{1/2}`.
    #[error("odd power of q^(1/2) has no residue at q = -1 (half-exponent {0})")]
    OddHalfPower(i64),
    /// Malformed serialized input.
    #[error("malformed JSON: {0}")]
    Json(String),
    /// Lattice vectors of differing rank were combined.
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
}
