//! Univariate polynomials `Σ c_k X^k` over a coefficient ring.

use std::fmt;

use crate::group_algebra::OrbitPolynomial;
use crate::laurent::HalfPowerLaurent;

/// Coefficients of an [`XPolynomial`]: anything with a recognizable zero.
pub trait Coefficient: Clone + PartialEq {
    /// Additive identity.
    fn zero() -> Self;
    /// True for the additive identity.
    fn is_zero(&self) -> bool;
}

/// Coefficients that can also be added and multiplied.
pub trait Ring: Coefficient {
    /// Sum.
    fn add(&self, other: &Self) -> Self;
    /// Product.
    fn mul(&self, other: &Self) -> Self;
}

impl Coefficient for HalfPowerLaurent {
    fn zero() -> Self {
        HalfPowerLaurent::zero()
    }
    fn is_zero(&self) -> bool {
        HalfPowerLaurent::is_zero(self)
    }
}

impl Ring for HalfPowerLaurent {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl Coefficient for OrbitPolynomial {
    fn zero() -> Self {
        OrbitPolynomial::zero()
    }
    fn is_zero(&self) -> bool {
        OrbitPolynomial::is_zero(self)
    }
}

impl Ring for OrbitPolynomial {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

/// A polynomial in `X`; trailing zero coefficients are trimmed so that the
/// leading coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct XPolynomial<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> XPolynomial<C> {
    /// Builds a polynomial from its coefficients `c_0, c_1, …`.
    pub fn new(coeffs: Vec<C>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// The coefficient list, lowest degree first.
    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `X^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Applies a map to each coefficient, passing the degree.
    pub fn map<D: Coefficient, F: Fn(usize, &C) -> D>(&self, f: F) -> XPolynomial<D> {
        XPolynomial::new(self.coeffs.iter().enumerate().map(|(k, c)| f(k, c)).collect())
    }

    /// Fallible version of [`XPolynomial::map`].
    pub fn try_map<D: Coefficient, E, F: Fn(usize, &C) -> Result<D, E>>(&self, f: F) -> Result<XPolynomial<D>, E> {
        let v: Result<Vec<D>, E> = self.coeffs.iter().enumerate().map(|(k, c)| f(k, c)).collect();
        Ok(XPolynomial::new(v?))
    }
}

impl<C: Ring> XPolynomial<C> {
    /// Product of two polynomials.
    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::new(Vec::new());
        }
        let mut out = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }
}

impl<C: fmt::Display> fmt::Display for XPolynomial<C> {
    /// One line per nonzero coefficient: `X^k: c_k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coeffs.iter().enumerate() {
            writeln!(f, "X^{k}: {c}")?;
        }
        Ok(())
    }
}

impl<C: fmt::Display> fmt::Debug for XPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
