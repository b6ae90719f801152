//! Elements of the spherical Hecke algebra in the Cartan basis `(Kϖ^λK)`.

use std::collections::BTreeMap;
use std::fmt;

use exact_algebra::{Coefficient, HalfPowerLaurent};
use serde_json::{json, Value};

/// A finite combination `Σ c_λ (Kϖ^λK)` over dominant `λ`.
///
/// Only addition and scalar multiplication are provided; convolution products
/// are computed through the Satake transform.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct HeckeCombination {
    terms: BTreeMap<Vec<i64>, HalfPowerLaurent>,
}

impl HeckeCombination {
    /// The zero element.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The single operator `c · (Kϖ^λK)`.
    pub fn single(lambda: Vec<i64>, c: HalfPowerLaurent) -> Self {
        let mut out = Self::zero();
        out.add_term(lambda, &c);
        out
    }

    /// Builds a combination from `(λ, c)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (Vec<i64>, HalfPowerLaurent)>>(pairs: I) -> Self {
        let mut out = Self::zero();
        for (l, c) in pairs {
            out.add_term(l, &c);
        }
        out
    }

    /// Adds `c · (Kϖ^λK)` in place.
    pub fn add_term(&mut self, lambda: Vec<i64>, c: &HalfPowerLaurent) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(lambda.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    /// Iterates over `(λ, c_λ)` in lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<i64>, &HalfPowerLaurent)> {
        self.terms.iter()
    }

    /// Coefficient of `(Kϖ^λK)`.
    pub fn coeff(&self, lambda: &[i64]) -> HalfPowerLaurent {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// True for the zero element.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of operators with nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// True when no operator is present.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum.
    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c);
        }
        out
    }

    /// Multiplies every coefficient by a Laurent polynomial.
    pub fn scale(&self, c: &HalfPowerLaurent) -> Self {
        Self::from_terms(self.terms.iter().map(|(l, v)| (l.clone(), v * c)))
    }

    /// Applies a map to every coefficient.
    pub fn map_coeffs<F: Fn(&HalfPowerLaurent) -> HalfPowerLaurent>(&self, f: F) -> Self {
        Self::from_terms(self.terms.iter().map(|(l, v)| (l.clone(), f(v))))
    }

    /// Relabels operators by a map on cocharacters.
    pub fn map_lattice<F: Fn(&[i64]) -> Vec<i64>>(&self, f: F) -> Self {
        Self::from_terms(self.terms.iter().map(|(l, v)| (f(l), v.clone())))
    }

    /// JSON rendering: a list of `{"lambda": [...], "coeff": [[halfExp, int], ...]}`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(l, c)| {
                    let coeff: Vec<Value> = c.terms().map(|(h, v)| json!([h, v.to_string()])).collect();
                    json!({ "lambda": l, "coeff": coeff, "pretty": c.to_string() })
                })
                .collect(),
        )
    }
}

impl Coefficient for HeckeCombination {
    fn zero() -> Self {
        HeckeCombination::zero()
    }
    fn is_zero(&self) -> bool {
        HeckeCombination::is_zero(self)
    }
}

fn fmt_lambda(l: &[i64]) -> String {
    let s: Vec<String> = l.iter().map(|x| x.to_string()).collect();
    format!("(Kϖ^({})K)", s.join(","))
}

impl fmt::Display for HeckeCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *c == HalfPowerLaurent::one() {
                write!(f, "{}", fmt_lambda(l))?;
            } else {
                write!(f, "[{c}]{}", fmt_lambda(l))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HeckeCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
