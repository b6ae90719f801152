//! Errors raised by Weyl group computations.

use thiserror::Error;

/// Failures of Weyl group queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    /// An element of length zero was required.
    #[error("element has length {0}, expected 0")]
    NotLengthZero(usize),
    /// The conjugate of a generator is not a generator.
    #[error("conjugate of generator s{0} is not a generator")]
    NotAGenerator(usize),
    /// A generator label outside `0..=l` was used.
    #[error("unknown generator label {0}")]
    UnknownGenerator(usize),
    /// A dominant cocharacter was required.
    #[error("cocharacter {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    /// The group generated by the requested generators is too large to enumerate.
    #[error("subgroup generated by {0:?} exceeds the enumeration budget")]
    InfiniteSubgroup(Vec<usize>),
    /// A subgroup was expected to be contained in the ambient generated group.
    #[error("generators {0:?} are not a subset of {1:?}")]
    NotSubset(Vec<usize>, Vec<usize>),
}
