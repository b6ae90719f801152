//! Laurent polynomials in `q^{1/2}` with arbitrary-precision integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;

/// An element of `Z[q^{±1/2}]`.
///
/// Exponents are stored as *half-exponents*: the key `k` stands for `q^{k/2}`.
/// Zero coefficients are never stored, so structural equality is ring equality.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfPowerLaurent {
    terms: BTreeMap<i64, BigInt>,
}

impl HalfPowerLaurent {
    /// The zero element.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit element.
    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The integer constant `c`.
    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    /// The monomial `c · q^{half/2}`.
    pub fn monomial(half: i64, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(half, c);
        }
        Self { terms }
    }

    /// `q^{half/2}`.
    pub fn q_half_pow(half: i64) -> Self {
        Self::monomial(half, 1)
    }

    /// `q^k` for an integer `k`.
    pub fn q_pow(k: i64) -> Self {
        Self::monomial(2 * k, 1)
    }

    /// The polynomial `q` itself.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// Builds an element from `(halfExponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I, C>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (h, c) in pairs {
            out.add_term(h, c.into());
        }
        out
    }

    /// Builds an ordinary polynomial `Σ coeffs[i] q^i`.
    pub fn from_q_coeffs(coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, &c)| (2 * i as i64, c)))
    }

    fn add_term(&mut self, half: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(half).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&half);
        }
    }

    /// True for the zero element.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates over `(halfExponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// True when the element has no terms.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `q^{half/2}`.
    pub fn coeff(&self, half: i64) -> BigInt {
        self.terms.get(&half).cloned().unwrap_or_default()
    }

    /// Largest half-exponent present.
    pub fn max_half(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Smallest half-exponent present.
    pub fn min_half(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// True when every half-exponent is even, i.e. the element lies in `Z[q^{±1}]`.
    pub fn is_integral_power(&self) -> bool {
        self.terms.keys().all(|k| k % 2 == 0)
    }

    /// If the element is `c · q^{half/2}`, returns `(half, c)`.
    pub fn as_monomial(&self) -> Option<(i64, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(k, v)| (*k, v))
        } else {
            None
        }
    }

    /// If the element is an integer constant, returns it.
    pub fn as_constant(&self) -> Option<BigInt> {
        if self.is_zero() {
            return Some(BigInt::zero());
        }
        match self.as_monomial() {
            Some((0, c)) => Some(c.clone()),
            _ => None,
        }
    }

    /// Multiplies by `q^{half/2}`.
    pub fn shift(&self, half: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, v)| (k + half, v.clone())).collect(),
        }
    }

    /// Multiplies by an integer scalar.
    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Substitutes `q ↦ q^{-1}`.
    pub fn invert_q(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, v)| (-k, v.clone())).collect(),
        }
    }

    /// Raises to a nonnegative integer power.
    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Image under `q^{1/2} ↦ 1` (for `ε = +1`) or `q ↦ -1` (for `ε = -1`).
    ///
    /// For `ε = -1` the element must lie in `Z[q^{±1}]`.
    pub fn residue_at(&self, eps: i8) -> Result<BigInt, AlgebraError> {
        let mut acc = BigInt::zero();
        for (k, c) in &self.terms {
            if eps >= 0 {
                acc += c;
            } else {
                if k % 2 != 0 {
                    return Err(AlgebraError::OddHalfPower(*k));
                }
                if (k / 2) % 2 == 0 {
                    acc += c;
                } else {
                    acc -= c;
                }
            }
        }
        Ok(acc)
    }

    /// Evaluates at a rational value of `q`, provided all exponents are integral.
    pub fn eval_q(&self, q: &BigRational) -> Result<BigRational, AlgebraError> {
        let mut acc = BigRational::zero();
        for (k, c) in &self.terms {
            if k % 2 != 0 {
                return Err(AlgebraError::OddHalfPower(*k));
            }
            let e = k / 2;
            let base = if e >= 0 { q.clone() } else { q.recip() };
            let mut p = BigRational::one();
            for _ in 0..e.unsigned_abs() {
                p *= &base;
            }
            acc += p * BigRational::from_integer(c.clone());
        }
        Ok(acc)
    }

    /// Evaluates at an integer `q`, returning an exact rational number.
    pub fn eval_int(&self, q: i64) -> Result<BigRational, AlgebraError> {
        self.eval_q(&BigRational::from_integer(BigInt::from(q)))
    }

    /// Exact quotient `self / d`; fails unless `d` divides `self` in `Z[q^{±1/2}]`.
    pub fn exact_div(&self, d: &Self) -> Result<Self, AlgebraError> {
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (d_top, d_lead) = d.terms.iter().next_back().map(|(k, v)| (*k, v.clone())).unwrap();
        let d_bottom = d.min_half().unwrap();
        let floor = self.min_half().unwrap() - d_bottom;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((top, lead)) = rem.terms.iter().next_back().map(|(k, v)| (*k, v.clone())) {
            let e = top - d_top;
            if e < floor || !(&lead % &d_lead).is_zero() {
                return Err(AlgebraError::NonzeroRemainder);
            }
            let t = Self::monomial(e, &lead / &d_lead);
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        Ok(quot)
    }
}

/// The Gaussian binomial `[n choose k]_q` as a polynomial in `q`.
pub fn gaussian_binomial(n: u32, k: u32) -> HalfPowerLaurent {
    if k > n {
        return HalfPowerLaurent::zero();
    }
    let mut num = HalfPowerLaurent::one();
    let mut den = HalfPowerLaurent::one();
    for i in 0..k {
        num = &num * &(HalfPowerLaurent::one() - HalfPowerLaurent::q_pow((n - i) as i64));
        den = &den * &(HalfPowerLaurent::one() - HalfPowerLaurent::q_pow((i + 1) as i64));
    }
    num.exact_div(&den).expect("Gaussian binomials are polynomials")
}

impl Add<&HalfPowerLaurent> for &HalfPowerLaurent {
    type Output = HalfPowerLaurent;
    fn add(self, rhs: &HalfPowerLaurent) -> HalfPowerLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for HalfPowerLaurent {
    type Output = HalfPowerLaurent;
    fn add(mut self, rhs: HalfPowerLaurent) -> HalfPowerLaurent {
        self += &rhs;
        self
    }
}

impl AddAssign<&HalfPowerLaurent> for HalfPowerLaurent {
    fn add_assign(&mut self, rhs: &HalfPowerLaurent) {
        for (k, v) in &rhs.terms {
            self.add_term(*k, v.clone());
        }
    }
}

impl Sub<&HalfPowerLaurent> for &HalfPowerLaurent {
    type Output = HalfPowerLaurent;
    fn sub(self, rhs: &HalfPowerLaurent) -> HalfPowerLaurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for HalfPowerLaurent {
    type Output = HalfPowerLaurent;
    fn sub(mut self, rhs: HalfPowerLaurent) -> HalfPowerLaurent {
        self -= &rhs;
        self
    }
}

impl SubAssign<&HalfPowerLaurent> for HalfPowerLaurent {
    fn sub_assign(&mut self, rhs: &HalfPowerLaurent) {
        for (k, v) in &rhs.terms {
            self.add_term(*k, -v.clone());
        }
    }
}

impl Mul<&HalfPowerLaurent> for &HalfPowerLaurent {
    type Output = HalfPowerLaurent;
    fn mul(self, rhs: &HalfPowerLaurent) -> HalfPowerLaurent {
        let mut out = HalfPowerLaurent::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Mul for HalfPowerLaurent {
    type Output = HalfPowerLaurent;
    fn mul(self, rhs: HalfPowerLaurent) -> HalfPowerLaurent {
        &self * &rhs
    }
}

impl Neg for HalfPowerLaurent {
    type Output = HalfPowerLaurent;
    fn neg(self) -> HalfPowerLaurent {
        HalfPowerLaurent {
            terms: self.terms.into_iter().map(|(k, v)| (k, -v)).collect(),
        }
    }
}

impl Neg for &HalfPowerLaurent {
    type Output = HalfPowerLaurent;
    fn neg(self) -> HalfPowerLaurent {
        -self.clone()
    }
}

impl From<i64> for HalfPowerLaurent {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

fn fmt_power(half: i64) -> String {
    if half % 2 == 0 {
        let e = half / 2;
        match e {
            1 => "q".to_string(),
            _ => format!("q^{e}"),
        }
    } else {
        format!("q^({half}/2)")
    }
}

impl fmt::Display for HalfPowerLaurent {
    /// Prints terms from highest to lowest power, e.g. `q^2 - q + 1` or `q^(3/2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if *k == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", fmt_power(*k))?;
            } else {
                write!(f, "{abs}*{}", fmt_power(*k))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HalfPowerLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_powers_multiply() {
        let h = HalfPowerLaurent::q_half_pow(1);
        assert_eq!(&h * &h, HalfPowerLaurent::q());
    }

    #[test]
    fn difference_of_squares() {
        let q = HalfPowerLaurent::q();
        let one = HalfPowerLaurent::one();
        let lhs = &(&q - &one) * &(&q + &one);
        assert_eq!(lhs, HalfPowerLaurent::from_q_coeffs(&[-1, 0, 1]));
    }

    #[test]
    fn cancellation_leaves_one() {
        let a = HalfPowerLaurent::one() + HalfPowerLaurent::q_pow(-1);
        let b = -HalfPowerLaurent::q_pow(-1);
        assert_eq!(a + b, HalfPowerLaurent::one());
    }

    #[test]
    fn residues() {
        let f = HalfPowerLaurent::from_q_coeffs(&[1, 1, 1]);
        assert_eq!(f.residue_at(1).unwrap(), BigInt::from(3));
        let g = HalfPowerLaurent::from_q_coeffs(&[1, 2, 1]);
        assert_eq!(g.residue_at(-1).unwrap(), BigInt::zero());
        let h = HalfPowerLaurent::from_q_coeffs(&[-1, 1]);
        assert_eq!(h.residue_at(1).unwrap(), BigInt::zero());
        assert_eq!(
            HalfPowerLaurent::q_half_pow(3).residue_at(-1),
            Err(AlgebraError::OddHalfPower(3))
        );
    }

    #[test]
    fn exact_division_round_trip() {
        let a = HalfPowerLaurent::from_terms([(-3, 2), (0, -1), (5, 7)]);
        let b = HalfPowerLaurent::from_q_coeffs(&[1, -3, 1]);
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        assert_eq!(
            HalfPowerLaurent::q().exact_div(&HalfPowerLaurent::from_q_coeffs(&[1, 1])),
            Err(AlgebraError::NonzeroRemainder)
        );
    }

    #[test]
    fn gaussian_binomial_values() {
        assert_eq!(
            gaussian_binomial(4, 2),
            HalfPowerLaurent::from_q_coeffs(&[1, 1, 2, 1, 1])
        );
        assert_eq!(gaussian_binomial(3, 0), HalfPowerLaurent::one());
    }

    #[test]
    fn display_is_readable() {
        let f = HalfPowerLaurent::from_terms([(4, 1), (1, -2), (0, 1), (-2, 3)]);
        assert_eq!(f.to_string(), "q^2 - 2*q^(1/2) + 1 + 3*q^-1");
    }
}
