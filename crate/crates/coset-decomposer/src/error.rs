//! Errors raised by the decomposer.

use thiserror::Error;
use weyl_engine::WeylError;

/// Failure modes of the symbolic decompositions.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecomposeError {
    /// A strictly shorter element exists in `W_X w W_Y`.
    #[error("element of length {0} is not the minimal representative of its double coset (length {1} exists)")]
    NotReduced(usize, usize),
    /// Parameters outside the admissible range.
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    /// The preset has no tabulated mixed decomposition.
    #[error("no mixed class table for {0}")]
    NoTable(String),
    /// Propagated from the Weyl group layer.
    #[error(transparent)]
    Weyl(#[from] WeylError),
}
