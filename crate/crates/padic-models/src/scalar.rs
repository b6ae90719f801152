//! Exact scalars `p^e (a + bξ)` of `Z[1/p][ξ]` with `ξ² = −1`.
//!
//! Rational models only use `b = 0`. For the unramified quadratic extension the
//! element `ξ = √−1` is a unit of trace zero, and `−1` must be a non-residue, so the
//! extension models require `p ≡ 3 (mod 4)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An exact element `p^e (a + bξ)`, normalized so that `p` does not divide both `a` and `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LocalScalar {
    p: i128,
    a: i128,
    b: i128,
    e: i32,
}

impl LocalScalar {
    /// The integer `n` at the prime `p`.
    pub fn int(p: u32, n: i64) -> Self {
        Self::new(p, n as i128, 0, 0)
    }

    /// `a + bξ` for integers `a`, `b`.
    pub fn ext(p: u32, a: i64, b: i64) -> Self {
        Self::new(p, a as i128, b as i128, 0)
    }

    /// `ϖ^k = p^k`.
    pub fn pi_pow(p: u32, k: i32) -> Self {
        Self::new(p, 1, 0, k)
    }

    /// Zero.
    pub fn zero(p: u32) -> Self {
        Self::int(p, 0)
    }

    /// One.
    pub fn one(p: u32) -> Self {
        Self::int(p, 1)
    }

    fn new(p: u32, a: i128, b: i128, e: i32) -> Self {
        let p = p as i128;
        if a == 0 && b == 0 {
            return Self { p, a: 0, b: 0, e: 0 };
        }
        let (mut a, mut b, mut e) = (a, b, e);
        while a % p == 0 && b % p == 0 {
            a /= p;
            b /= p;
            e += 1;
        }
        Self { p, a, b, e }
    }

    /// The prime.
    pub fn prime(&self) -> u32 {
        self.p as u32
    }

    /// True for zero.
    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// The valuation `min(v(a), v(b)) + e` (unramified, so `v(ξ) = 0`); `None` for zero.
    pub fn valuation(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.e)
    }

    /// The Galois conjugate `a − bξ`.
    pub fn conj(&self) -> Self {
        Self { b: -self.b, ..*self }
    }

    /// True when the `ξ`-part vanishes.
    pub fn is_rational(&self) -> bool {
        self.b == 0
    }

    /// `(a, b, e)` with the value `p^e (a + bξ)`.
    pub fn parts(&self) -> (i128, i128, i32) {
        (self.a, self.b, self.e)
    }

    /// Inverse of `±p^k` or `±ξ p^k`; other inverses leave `Z[1/p][ξ]`.
    pub fn inverse_monomial(&self) -> Option<Self> {
        let p = self.prime();
        match (self.a, self.b) {
            (1, 0) | (-1, 0) => Some(Self::new(p, self.a, 0, -self.e)),
            (0, 1) | (0, -1) => Some(Self::new(p, 0, -self.b, -self.e)),
            _ => None,
        }
    }

    /// `self · p^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            *self
        } else {
            Self { e: self.e + k, ..*self }
        }
    }

    /// The value at exponent `e ≥ self.e` as integer coordinates `(a, b)` times `p^e`.
    pub(crate) fn coords_at(&self, e: i32) -> (i128, i128) {
        if self.is_zero() {
            return (0, 0);
        }
        let k = self.e - e;
        assert!(k >= 0, "coordinates requested below the valuation");
        let f = self.p.pow(k as u32);
        (self.a * f, self.b * f)
    }
}

impl Add for LocalScalar {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        if self.is_zero() {
            return o;
        }
        if o.is_zero() {
            return self;
        }
        let e = self.e.min(o.e);
        let (a1, b1) = self.coords_at(e);
        let (a2, b2) = o.coords_at(e);
        Self::new(self.prime(), a1 + a2, b1 + b2, e)
    }
}

impl Neg for LocalScalar {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            a: -self.a,
            b: -self.b,
            ..self
        }
    }
}

impl Sub for LocalScalar {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Mul for LocalScalar {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.prime());
        }
        let a = self.a * o.a - self.b * o.b;
        let b = self.a * o.b + self.b * o.a;
        Self::new(self.prime(), a, b, self.e + o.e)
    }
}

impl fmt::Display for LocalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let core = match (self.a, self.b) {
            (a, 0) => format!("{a}"),
            (0, b) => format!("{b}ξ"),
            (a, b) => format!("({a}{b:+}ξ)"),
        };
        match self.e {
            0 => write!(f, "{core}"),
            e => write!(f, "{core}·p^{e}"),
        }
    }
}
