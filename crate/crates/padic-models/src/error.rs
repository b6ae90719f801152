//! Errors of the concrete models.

use thiserror::Error;

/// Failures of a concrete computation. Count and duplicate failures are never silenced.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PadicError {
    /// A matrix is singular (to working precision).
    #[error("singular matrix")]
    Singular,
    /// The fixed working precision is too small for this lattice.
    #[error("working precision exhausted: need more than {needed} digits, have {available}")]
    Precision {
        /// Digits required.
        needed: u32,
        /// Digits available.
        available: u32,
    },
    /// Sorted valuations are not in the image of the dominant-cocharacter embedding.
    #[error("valuations {0:?} are not the image of a cocharacter of this group")]
    EmbeddingMismatch(Vec<i64>),
    /// The enumeration produced the wrong number of cosets.
    #[error("coset count mismatch: expected {expected}, found {found}")]
    CountMismatch {
        /// Symbolic total at q = p.
        expected: u128,
        /// Number enumerated.
        found: u128,
    },
    /// Two parameter tuples produced the same coset.
    #[error("duplicate coset from cell {cell} parameters {params:?}")]
    DuplicateCoset {
        /// Cell word.
        cell: String,
        /// Offending parameter indices.
        params: Vec<usize>,
    },
    /// An enumerated coset lies in the wrong double coset.
    #[error("coset in cell {cell} has Cartan type {found:?}, expected {expected:?}")]
    WrongDoubleCoset {
        /// Cell word.
        cell: String,
        /// Operator cocharacter.
        expected: Vec<i64>,
        /// Cartan type found.
        found: Vec<i64>,
    },
    /// Raising the truncation level changed the result.
    #[error("truncation level {0} is too low: level {0}+1 gives a different answer")]
    LevelTooLow(u32),
    /// A matrix fails the group condition.
    #[error("matrix is not in the group: {0}")]
    NotInGroup(String),
    /// The model does not support the request.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// The symbolic decomposition failed.
    #[error(transparent)]
    Decompose(#[from] coset_decomposer::DecomposeError),
}
