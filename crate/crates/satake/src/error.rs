//! Errors raised by Satake transform computations.

use exact_algebra::AlgebraError;
use root_datum::RootDatumError;
use thiserror::Error;

/// Failures of Satake computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SatakeError {
    /// Macdonald's formula was requested for a non-split datum.
    #[error("Macdonald's formula requires a split datum; {0} has nontrivial residue degrees")]
    NotSplit(String),
    /// A dominant cocharacter was required.
    #[error("cocharacter {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    /// A minuscule cocharacter was required.
    #[error("cocharacter {0:?} is not minuscule")]
    NotMinuscule(Vec<i64>),
    /// A central cocharacter was required.
    #[error("cocharacter {0:?} is not central")]
    NotCentral(Vec<i64>),
    /// The input is not Weyl invariant.
    #[error("element is not Weyl invariant (coefficient of {0:?} differs from its reflection)")]
    NotInvariant(Vec<i64>),
    /// The transform table lacks a required entry.
    #[error("transform table has no entry for {0:?}")]
    MissingEntry(Vec<i64>),
    /// The triangular elimination did not terminate within its bound.
    #[error("Satake inversion exceeded its iteration bound of {0}")]
    NonTermination(usize),
    /// Transposition requires the longest Weyl element to act as −1.
    #[error("the longest Weyl element of {0} does not act as -1")]
    OppositionNotMinusOne(String),
    /// Exact arithmetic failed.
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    /// Root datum query failed.
    #[error(transparent)]
    RootDatum(#[from] RootDatumError),
}
