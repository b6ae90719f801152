//! Exact square matrices over `Z[1/p][ξ]`, with an optional `G_m` exponent.
//!
//! The `G_m × GL_n` model stores the `G_m` component of an element `(ϖ^e·u, g)` only
//! through its valuation `e`; units there act trivially on every coset space we use.

use std::fmt;

use crate::residue::{ResMatrix, Ring};
use crate::scalar::LocalScalar;

/// An `n × n` matrix with exact entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LocalMatrix {
    n: usize,
    p: u32,
    entries: Vec<LocalScalar>,
    /// Valuation of the `G_m` component (zero for models without one).
    pub gm: i64,
}

impl LocalMatrix {
    /// The identity.
    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zero(p, n);
        for i in 0..n {
            m.set(i, i, LocalScalar::one(p));
        }
        m
    }

    /// The zero matrix.
    pub fn zero(p: u32, n: usize) -> Self {
        Self {
            n,
            p,
            entries: vec![LocalScalar::zero(p); n * n],
            gm: 0,
        }
    }

    /// A matrix from rows of exact scalars.
    pub fn from_rows(p: u32, rows: Vec<Vec<LocalScalar>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self {
            n,
            p,
            entries: rows.into_iter().flatten().collect(),
            gm: 0,
        }
    }

    /// A matrix from rows of `(coefficient, power of p)` pairs with rational coefficients.
    pub fn from_int_rows(p: u32, rows: &[Vec<(i64, i32)>]) -> Self {
        Self::from_rows(
            p,
            rows.iter()
                .map(|r| r.iter().map(|&(c, e)| LocalScalar::int(p, c).shift(e)).collect())
                .collect(),
        )
    }

    /// The diagonal matrix `diag(ϖ^{e₁}, …, ϖ^{e_n})`.
    pub fn pi_diag(p: u32, exps: &[i64]) -> Self {
        let mut m = Self::zero(p, exps.len());
        for (i, &e) in exps.iter().enumerate() {
            m.set(i, i, LocalScalar::pi_pow(p, e as i32));
        }
        m
    }

    /// The same matrix with a new `G_m` valuation.
    pub fn with_gm(mut self, gm: i64) -> Self {
        self.gm = gm;
        self
    }

    /// Size `n`.
    pub fn dim(&self) -> usize {
        self.n
    }

    /// The prime.
    pub fn prime(&self) -> u32 {
        self.p
    }

    /// Entry `(i, j)` (zero-based).
    pub fn get(&self, i: usize, j: usize) -> LocalScalar {
        self.entries[i * self.n + j]
    }

    /// Sets entry `(i, j)` (zero-based).
    pub fn set(&mut self, i: usize, j: usize, x: LocalScalar) {
        self.entries[i * self.n + j] = x;
    }

    /// Product, adding the `G_m` valuations.
    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n, "dimension mismatch");
        let n = self.n;
        let mut out = Self::zero(self.p, n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] = out.entries[i * n + j] + a * b;
                    }
                }
            }
        }
        out.gm = self.gm + o.gm;
        out
    }

    /// Transpose.
    pub fn transpose(&self) -> Self {
        let mut out = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(i, j, self.get(j, i));
            }
        }
        out
    }

    /// Entrywise Galois conjugate.
    pub fn conj(&self) -> Self {
        let mut out = self.clone();
        out.entries.iter_mut().for_each(|x| *x = x.conj());
        out
    }

    /// Scalar multiple.
    pub fn scale(&self, c: LocalScalar) -> Self {
        let mut out = self.clone();
        out.entries.iter_mut().for_each(|x| *x = *x * c);
        out
    }

    /// The inverse of a monomial matrix whose non-zero entries are `±p^k` or `±ξp^k`.
    pub fn monomial_inverse(&self) -> Option<Self> {
        let mut out = Self::zero(self.p, self.n);
        for i in 0..self.n {
            let nz: Vec<usize> = (0..self.n).filter(|&j| !self.get(i, j).is_zero()).collect();
            if nz.len() != 1 {
                return None;
            }
            out.set(nz[0], i, self.get(i, nz[0]).inverse_monomial()?);
        }
        if (0..self.n).any(|j| (0..self.n).filter(|&i| !out.get(i, j).is_zero()).count() != 1) {
            return None;
        }
        out.gm = -self.gm;
        Some(out)
    }

    /// `self^k` for a monomial matrix (negative `k` uses the monomial inverse).
    pub fn monomial_pow(&self, k: i64) -> Option<Self> {
        let base = if k < 0 { self.monomial_inverse()? } else { self.clone() };
        Some((0..k.unsigned_abs()).fold(Self::identity(self.p, self.n), |acc, _| acc.mul(&base)))
    }

    /// The minimum entry valuation (`None` for the zero matrix).
    pub fn min_valuation(&self) -> Option<i32> {
        self.entries.iter().filter_map(|x| x.valuation()).min()
    }

    /// True when every entry has `ξ`-part zero.
    pub fn is_rational(&self) -> bool {
        self.entries.iter().all(|x| x.is_rational())
    }

    /// The residue matrix of `p^shift · self`; requires integrality.
    pub fn to_res(&self, ring: &Ring, shift: i32) -> ResMatrix {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| ring.from_scalar(&self.get(i, j), shift)).collect())
            .collect()
    }

    /// If `self = c · other` for a scalar `c`, returns `c`.
    pub fn scalar_ratio(&self, other: &Self) -> Option<LocalScalar> {
        let pos = (0..self.n * self.n).find(|&k| !other.entries[k].is_zero())?;
        let c_other = other.entries[pos];
        let c_self = self.entries[pos];
        // c = c_self / c_other, tested as c_self·other == c_other·self, then recovered exactly
        // when c_other is a monomial.
        let c = c_self * c_other.inverse_monomial()?;
        (other.scale(c).entries == self.entries).then_some(c)
    }
}

impl fmt::Display for LocalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.n)
            .map(|i| {
                let r: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
                format!("[{}]", r.join(", "))
            })
            .collect();
        if self.gm != 0 {
            write!(f, "(ϖ^{}; [{}])", self.gm, rows.join(", "))
        } else {
            write!(f, "[{}]", rows.join(", "))
        }
    }
}
