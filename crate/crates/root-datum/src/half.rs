//! Half-integers, the values of pairings against the half-sum of positive roots.

use std::fmt;

/// The number `twice / 2`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct HalfInt {
    /// Twice the represented value.
    pub twice: i64,
}

impl HalfInt {
    /// The half-integer `twice / 2`.
    pub fn from_twice(twice: i64) -> Self {
        Self { twice }
    }

    /// The integer `n`.
    pub fn from_int(n: i64) -> Self {
        Self { twice: 2 * n }
    }

    /// The value as an integer, if it is one.
    pub fn as_int(self) -> Option<i64> {
        (self.twice % 2 == 0).then_some(self.twice / 2)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_int() {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "{}/2", self.twice),
        }
    }
}
