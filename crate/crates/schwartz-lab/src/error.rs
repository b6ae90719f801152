//! Errors of the finite-level Schwartz computations.

use padic_models::PadicError;
use thiserror::Error;
use zeta_checker::ZetaError;

/// Failures of a finite-level computation. Mismatches are hard failures, never warnings.
#[derive(Debug, Error)]
pub enum SchwartzError {
    /// The finite model cannot represent the requested function faithfully.
    #[error("levels M = {m}, N = {n} are too small: {reason}")]
    LevelTooSmall {
        /// Lower level.
        m: u32,
        /// Upper level.
        n: u32,
        /// What did not fit.
        reason: String,
    },
    /// A stabilizer computation changed between level `N` and `N + 1`.
    #[error("stabilizer index is not stable at level {level}: {at_level} vs {at_next}")]
    LevelTooLow {
        /// The working level `N`.
        level: u32,
        /// The index at `N`.
        at_level: u64,
        /// The index at `N + 1`.
        at_next: u64,
    },
    /// Two independently computed functions differ.
    #[error("{what}: mismatch at point {point:?}: expected {expected}, found {found}")]
    Mismatch {
        /// Which identity failed.
        what: String,
        /// The point, as numerators of `p^{-M}`-scaled coordinates.
        point: Vec<i64>,
        /// The expected value.
        expected: i64,
        /// The computed value.
        found: i64,
    },
    /// A function is not invariant under a generator of the acting group.
    #[error("function is not invariant under generator {generator} at point {point}")]
    NotInvariant {
        /// Index of the point.
        point: usize,
        /// Index of the generator.
        generator: usize,
    },
    /// Two objects live on different finite models.
    #[error("incompatible finite models")]
    Incompatible,
    /// The input is outside what this module handles.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// A concrete model computation failed.
    #[error(transparent)]
    Padic(#[from] PadicError),
    /// The Hecke polynomial could not be built.
    #[error(transparent)]
    Zeta(#[from] ZetaError),
}
