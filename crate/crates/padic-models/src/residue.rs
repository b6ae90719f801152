//! Arithmetic in `O/p^M` and `O_E/p^M` with `O_E = O[ξ]`, `ξ² = −1`.
//!
//! The precision `M` is the largest exponent with `p^M < 2^{31}`, so every product of two
//! reduced coordinates fits in an `i64`. Working modulo `p^M` is exact for any lattice
//! containing `p^M Oⁿ`: reductions are column operations against the implicit columns
//! `p^M e_i`, and any choice of quotient in an elimination step is a legal column move.

use crate::scalar::LocalScalar;

/// The truncated coefficient ring `O_E / p^M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ring {
    p: i64,
    m: u32,
    pm: i64,
}

/// A residue `a + bξ` with `0 ≤ a, b < p^M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Res {
    /// Rational coordinate.
    pub a: i64,
    /// `ξ` coordinate.
    pub b: i64,
}

/// A square matrix over the truncated ring, stored row-major.
pub type ResMatrix = Vec<Vec<Res>>;

fn inv_mod(x: i64, m: i64) -> i64 {
    let (mut old_r, mut r) = (x.rem_euclid(m), m);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    assert_eq!(old_r, 1, "inverse of a non-unit requested");
    old_s.rem_euclid(m)
}

impl Ring {
    /// The ring at the prime `p` with the largest safe precision.
    pub fn new(p: u32) -> Self {
        let p = p as i64;
        let mut m = 0u32;
        let mut pm: i64 = 1;
        while pm * p < (1i64 << 31) {
            pm *= p;
            m += 1;
        }
        Self { p, m, pm }
    }

    /// The prime.
    pub fn prime(&self) -> u32 {
        self.p as u32
    }

    /// The precision `M`.
    pub fn precision(&self) -> u32 {
        self.m
    }

    fn red(&self, x: i64) -> i64 {
        x.rem_euclid(self.pm)
    }

    /// The residue of an integer pair `a + bξ`.
    pub fn elem(&self, a: i64, b: i64) -> Res {
        Res {
            a: self.red(a),
            b: self.red(b),
        }
    }

    /// Zero.
    pub fn zero(&self) -> Res {
        Res { a: 0, b: 0 }
    }

    /// One.
    pub fn one(&self) -> Res {
        Res { a: 1, b: 0 }
    }

    /// `p^k` (zero once `k ≥ M`).
    pub fn pi_pow(&self, k: u32) -> Res {
        if k >= self.m {
            self.zero()
        } else {
            Res { a: self.p.pow(k), b: 0 }
        }
    }

    /// The residue of an exact scalar multiplied by `p^shift`; the product must be integral.
    pub fn from_scalar(&self, x: &LocalScalar, shift: i32) -> Res {
        if x.is_zero() {
            return self.zero();
        }
        let (a, b, e) = x.parts();
        let e = e + shift;
        assert!(e >= 0, "non-integral scalar reduced modulo p^M");
        if e as u32 >= self.m {
            return self.zero();
        }
        let f = self.p.pow(e as u32);
        let pm = self.pm as i128;
        let (a, b) = (a.rem_euclid(pm) as i64, b.rem_euclid(pm) as i64);
        self.elem(self.red(a * f), self.red(b * f))
    }

    /// Sum.
    pub fn add(&self, x: Res, y: Res) -> Res {
        Res {
            a: self.red(x.a + y.a),
            b: self.red(x.b + y.b),
        }
    }

    /// Difference.
    pub fn sub(&self, x: Res, y: Res) -> Res {
        Res {
            a: self.red(x.a - y.a),
            b: self.red(x.b - y.b),
        }
    }

    /// Negation.
    pub fn neg(&self, x: Res) -> Res {
        self.sub(self.zero(), x)
    }

    /// Product, using `ξ² = −1`.
    pub fn mul(&self, x: Res, y: Res) -> Res {
        let a = self.red(x.a * y.a) - self.red(x.b * y.b);
        let b = self.red(x.a * y.b) + self.red(x.b * y.a);
        Res {
            a: self.red(a),
            b: self.red(b),
        }
    }

    /// Galois conjugate `a − bξ`.
    pub fn conj(&self, x: Res) -> Res {
        Res {
            a: x.a,
            b: self.red(-x.b),
        }
    }

    fn val_int(&self, x: i64) -> u32 {
        if x == 0 {
            return self.m;
        }
        let mut v = 0;
        let mut x = x;
        while x % self.p == 0 {
            x /= self.p;
            v += 1;
        }
        v
    }

    /// Valuation, capped at `M` (which stands for "zero to this precision").
    pub fn val(&self, x: Res) -> u32 {
        self.val_int(x.a).min(self.val_int(x.b))
    }

    /// Inverse of a unit. Requires `a² + b²` to be a unit, which holds for every unit of
    /// `O_E` when `−1` is a non-residue.
    pub fn inv(&self, x: Res) -> Res {
        if x.b == 0 {
            return Res {
                a: inv_mod(x.a, self.pm),
                b: 0,
            };
        }
        let n = self.red(self.red(x.a * x.a) + self.red(x.b * x.b));
        let ni = inv_mod(n, self.pm);
        self.mul(self.conj(x), Res { a: ni, b: 0 })
    }

    /// `x / p^v` for `v ≤ val(x)`; the top `v` digits of the quotient are arbitrary.
    pub fn div_pow(&self, x: Res, v: u32) -> Res {
        let f = self.p.pow(v);
        debug_assert!(x.a % f == 0 && x.b % f == 0);
        Res { a: x.a / f, b: x.b / f }
    }

    /// The canonical representative of `x` modulo `p^v` (coordinates in `[0, p^v)`).
    pub fn reduce_mod(&self, x: Res, v: u32) -> Res {
        let f = self.p.pow(v.min(self.m));
        Res {
            a: x.a.rem_euclid(f),
            b: x.b.rem_euclid(f),
        }
    }

    /// Matrix product.
    pub fn mat_mul(&self, x: &ResMatrix, y: &ResMatrix) -> ResMatrix {
        let n = x.len();
        let k = y.len();
        let c = y.first().map_or(0, |r| r.len());
        (0..n)
            .map(|i| {
                (0..c)
                    .map(|j| (0..k).fold(self.zero(), |acc, l| self.add(acc, self.mul(x[i][l], y[l][j]))))
                    .collect()
            })
            .collect()
    }

    /// Identity matrix.
    pub fn identity(&self, n: usize) -> ResMatrix {
        (0..n)
            .map(|i| (0..n).map(|j| if i == j { self.one() } else { self.zero() }).collect())
            .collect()
    }
}
