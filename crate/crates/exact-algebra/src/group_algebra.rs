//! Sparse group-algebra elements `Σ c_λ e^λ` over a cocharacter lattice.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::error::AlgebraError;
use crate::laurent::HalfPowerLaurent;

/// A point of the cocharacter lattice, as integer coordinates in a fixed basis.
pub type LatticeVector = Vec<i64>;

fn vadd(a: &[i64], b: &[i64]) -> LatticeVector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn vsub(a: &[i64], b: &[i64]) -> LatticeVector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// An element of `Z[q^{±1/2}][Λ]`: a finite sum of lattice monomials `e^λ` with
/// Laurent coefficients.
///
/// The name reflects its main use (Weyl-invariant elements written as orbit
/// sums), but arbitrary elements are allowed; zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct OrbitPolynomial {
    terms: BTreeMap<LatticeVector, HalfPowerLaurent>,
}

impl OrbitPolynomial {
    /// The zero element (of any rank).
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit `e^0` in rank `r`.
    pub fn one(rank: usize) -> Self {
        Self::monomial(vec![0; rank], HalfPowerLaurent::one())
    }

    /// The monomial `c · e^λ`.
    pub fn monomial(lambda: LatticeVector, c: HalfPowerLaurent) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(lambda, c);
        }
        Self { terms }
    }

    /// The bare monomial `e^λ`.
    pub fn exp(lambda: LatticeVector) -> Self {
        Self::monomial(lambda, HalfPowerLaurent::one())
    }

    /// Builds an element from `(λ, c)` pairs, summing repeats.
    pub fn from_terms<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (LatticeVector, HalfPowerLaurent)>,
    {
        let mut out = Self::zero();
        for (l, c) in pairs {
            out.add_term(l, &c);
        }
        out
    }

    /// Adds `c · e^λ` in place.
    pub fn add_term(&mut self, lambda: LatticeVector, c: &HalfPowerLaurent) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(lambda.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    /// True for the zero element.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored monomials.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// True when no monomial is stored.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates over `(λ, c_λ)` in lexicographic order of `λ`.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&LatticeVector, &HalfPowerLaurent)> {
        self.terms.iter()
    }

    /// The support `{λ : c_λ ≠ 0}`.
    pub fn support(&self) -> impl Iterator<Item = &LatticeVector> {
        self.terms.keys()
    }

    /// Coefficient of `e^λ`.
    pub fn coeff(&self, lambda: &[i64]) -> HalfPowerLaurent {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// Multiplies every coefficient by a Laurent polynomial.
    pub fn scale(&self, c: &HalfPowerLaurent) -> Self {
        Self::from_terms(self.terms.iter().map(|(l, v)| (l.clone(), v * c)))
    }

    /// Multiplies by `e^{λ₀}`.
    pub fn shift(&self, lambda0: &[i64]) -> Self {
        Self {
            terms: self.terms.iter().map(|(l, v)| (vadd(l, lambda0), v.clone())).collect(),
        }
    }

    /// Applies a lattice map to every exponent (e.g. a Weyl group element), summing collisions.
    pub fn map_lattice<F: Fn(&[i64]) -> LatticeVector>(&self, f: F) -> Self {
        Self::from_terms(self.terms.iter().map(|(l, v)| (f(l), v.clone())))
    }

    /// Applies a map to every coefficient, dropping terms that become zero.
    pub fn map_coeffs<F: Fn(&HalfPowerLaurent) -> HalfPowerLaurent>(&self, f: F) -> Self {
        Self::from_terms(self.terms.iter().map(|(l, v)| (l.clone(), f(v))))
    }

    /// Raises to a nonnegative integer power.
    pub fn pow(&self, rank: usize, e: u32) -> Self {
        let mut out = Self::one(rank);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Coefficientwise residue `q^{1/2} ↦ 1` (`ε = +1`) or `q ↦ -1` (`ε = -1`).
    pub fn residue_at(&self, eps: i8) -> Result<BTreeMap<LatticeVector, BigInt>, AlgebraError> {
        let mut out = BTreeMap::new();
        for (l, c) in &self.terms {
            let r = c.residue_at(eps)?;
            if r != BigInt::from(0) {
                out.insert(l.clone(), r);
            }
        }
        Ok(out)
    }

    /// Exact quotient `self / d` by graded long division.
    ///
    /// Monomials are totally ordered lexicographically, which is a
    /// translation-invariant order on the lattice; the leading term of a
    /// product is therefore the product of the leading terms, and the
    /// division terminates once the candidate exponent falls below the
    /// smallest exponent any exact quotient could have.
    pub fn exact_divide(&self, d: &Self) -> Result<Self, AlgebraError> {
        let (d_top, d_lead) = match d.terms.iter().next_back() {
            Some((l, c)) => (l.clone(), c.clone()),
            None => return Err(AlgebraError::DivisionByZero),
        };
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let d_bottom = d.terms.keys().next().unwrap();
        let n_bottom = self.terms.keys().next().unwrap();
        if d_bottom.len() != n_bottom.len() {
            return Err(AlgebraError::RankMismatch(n_bottom.len(), d_bottom.len()));
        }
        let floor = vsub(n_bottom, d_bottom);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((top, lead)) = rem.terms.iter().next_back().map(|(l, c)| (l.clone(), c.clone())) {
            let e = vsub(&top, &d_top);
            if e < floor {
                return Err(AlgebraError::NonzeroRemainder);
            }
            let c = lead.exact_div(&d_lead)?;
            let t = Self::monomial(e, c);
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        Ok(quot)
    }
}

impl Add<&OrbitPolynomial> for &OrbitPolynomial {
    type Output = OrbitPolynomial;
    fn add(self, rhs: &OrbitPolynomial) -> OrbitPolynomial {
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), c);
        }
        out
    }
}

impl Add for OrbitPolynomial {
    type Output = OrbitPolynomial;
    fn add(self, rhs: OrbitPolynomial) -> OrbitPolynomial {
        &self + &rhs
    }
}

impl Sub<&OrbitPolynomial> for &OrbitPolynomial {
    type Output = OrbitPolynomial;
    fn sub(self, rhs: &OrbitPolynomial) -> OrbitPolynomial {
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), &-c);
        }
        out
    }
}

impl Sub for OrbitPolynomial {
    type Output = OrbitPolynomial;
    fn sub(self, rhs: OrbitPolynomial) -> OrbitPolynomial {
        &self - &rhs
    }
}

impl Mul<&OrbitPolynomial> for &OrbitPolynomial {
    type Output = OrbitPolynomial;
    fn mul(self, rhs: &OrbitPolynomial) -> OrbitPolynomial {
        let mut out = OrbitPolynomial::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(vadd(a, b), &(x * y));
            }
        }
        out
    }
}

impl Mul for OrbitPolynomial {
    type Output = OrbitPolynomial;
    fn mul(self, rhs: OrbitPolynomial) -> OrbitPolynomial {
        &self * &rhs
    }
}

impl Neg for OrbitPolynomial {
    type Output = OrbitPolynomial;
    fn neg(self) -> OrbitPolynomial {
        OrbitPolynomial {
            terms: self.terms.into_iter().map(|(l, c)| (l, -c)).collect(),
        }
    }
}

impl Neg for &OrbitPolynomial {
    type Output = OrbitPolynomial;
    fn neg(self) -> OrbitPolynomial {
        -self.clone()
    }
}

fn fmt_lattice(l: &[i64]) -> String {
    let inner: Vec<String> = l.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(","))
}

impl fmt::Display for OrbitPolynomial {
    /// Prints `[c]e^(λ)` terms from the lexicographically largest exponent down.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c == &HalfPowerLaurent::one() {
                write!(f, "e^{}", fmt_lattice(l))?;
            } else {
                write!(f, "[{c}]e^{}", fmt_lattice(l))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for OrbitPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(l: &[i64]) -> OrbitPolynomial {
        OrbitPolynomial::exp(l.to_vec())
    }

    #[test]
    fn geometric_factorization() {
        let one = OrbitPolynomial::one(2);
        let n = &one - &e(&[2, -2]);
        let d = &one - &e(&[1, -1]);
        assert_eq!(n.exact_divide(&d).unwrap(), &one + &e(&[1, -1]));
    }

    #[test]
    fn zero_divides_to_zero() {
        let d = &OrbitPolynomial::one(2) - &e(&[1, -1]);
        assert!(OrbitPolynomial::zero().exact_divide(&d).unwrap().is_zero());
    }

    #[test]
    fn constructed_product_divides_back() {
        let d = &OrbitPolynomial::one(3) - &e(&[0, 1, -1]);
        let f = OrbitPolynomial::monomial(vec![2, 1, 1], HalfPowerLaurent::q());
        assert_eq!((&d * &f).exact_divide(&d).unwrap(), f);
    }

    #[test]
    fn indivisible_is_reported() {
        let d = &OrbitPolynomial::one(2) - &e(&[1, -1]);
        let n = &OrbitPolynomial::one(2) + &e(&[1, -1]);
        assert_eq!(n.exact_divide(&d), Err(AlgebraError::NonzeroRemainder));
    }
}
