//! Errors raised by root-datum queries and construction.

use thiserror::Error;

/// Failures of root-datum construction or queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootDatumError {
    /// Vectors of the wrong length were supplied.
    #[error("rank mismatch: got length {0}, expected {1}")]
    RankMismatch(usize, usize),
    /// A dominant cocharacter was required.
    #[error("cocharacter {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    /// The configuration violates a root-datum axiom.
    #[error("invalid root datum: {0}")]
    InvalidDatum(String),
    /// An unknown preset name was requested.
    #[error("unknown preset {0:?}")]
    UnknownPreset(String),
}
