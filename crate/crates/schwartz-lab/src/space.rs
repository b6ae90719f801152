//! The finite model `(p^{−M}Z/p^N Z)⁴` of `X = F² × F²` and functions on it.
//!
//! A point is a pair of column vectors `(u⃗, v⃗)`; each coordinate is stored as the
//! numerator `a ∈ Z/p^{M+N}` of `a/p^M`. A function on the finite model is a Schwartz
//! function on `X` supported in `(p^{−M}O)⁴` and invariant under `(p^N O)⁴`.

use serde_json::{json, Value};

use crate::error::SchwartzError;

/// Largest number of points a dense function may have.
const MAX_POINTS: usize = 1 << 26;

/// The levels `(M, N)` of a finite model at the prime `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Level {
    p: u32,
    m: u32,
    n: u32,
    modulus: i64,
    points: usize,
}

impl Level {
    /// The model `(p^{−M}Z/p^N Z)⁴`.
    pub fn new(p: u32, m: u32, n: u32) -> Result<Self, SchwartzError> {
        let side = (p as u64).checked_pow(m + n);
        let points = side
            .and_then(|s| s.checked_pow(4))
            .filter(|&c| c as usize <= MAX_POINTS);
        match (side, points) {
            (Some(side), Some(points)) if p >= 2 => Ok(Level {
                p,
                m,
                n,
                modulus: side as i64,
                points: points as usize,
            }),
            _ => Err(SchwartzError::LevelTooSmall {
                m,
                n,
                reason: format!("p^(4(M+N)) points exceed the dense budget {MAX_POINTS} or p < 2"),
            }),
        }
    }

    /// The default model for functions supported in `(p^{−M}O)⁴`: the largest `N ≤ 3`
    /// such that the `N + 1` stability re-run still fits a budget of `2²²` points.
    pub fn default_for(p: u32, m: u32) -> Result<Self, SchwartzError> {
        let budget = 1u64 << 22;
        let mut n = 0;
        for cand in 0..=3u32 {
            let fits = (p as u64)
                .checked_pow(4 * (m + cand + 1))
                .map(|c| c <= budget)
                .unwrap_or(false);
            if fits {
                n = cand;
            }
        }
        Level::new(p, m, n)
    }

    /// The same lower level with upper level `N + 1`.
    pub fn refine(&self) -> Result<Self, SchwartzError> {
        Level::new(self.p, self.m, self.n + 1)
    }

    /// The prime.
    pub fn prime(&self) -> u32 {
        self.p
    }

    /// The lower level `M`.
    pub fn lower(&self) -> u32 {
        self.m
    }

    /// The upper level `N`.
    pub fn upper(&self) -> u32 {
        self.n
    }

    /// `p^{M+N}`, the modulus of the stored numerators.
    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    /// Number of points.
    pub fn num_points(&self) -> usize {
        self.points
    }

    /// The numerators of a point.
    pub fn decode(&self, mut idx: usize) -> [i64; 4] {
        let side = self.modulus as usize;
        let mut out = [0i64; 4];
        for c in out.iter_mut() {
            *c = (idx % side) as i64;
            idx /= side;
        }
        out
    }

    /// The index of a point given by numerators (reduced mod `p^{M+N}`).
    pub fn encode(&self, coords: &[i64; 4]) -> usize {
        let side = self.modulus;
        coords
            .iter()
            .rev()
            .fold(0usize, |acc, &c| acc * side as usize + c.rem_euclid(side) as usize)
    }

    /// The valuation of the coordinate `a/p^M`, capped at `N` for zero classes.
    pub fn valuation(&self, a: i64) -> i64 {
        let mut a = a.rem_euclid(self.modulus);
        if a == 0 {
            return self.n as i64;
        }
        let mut v = 0i64;
        while a % self.p as i64 == 0 {
            a /= self.p as i64;
            v += 1;
        }
        v - self.m as i64
    }

    /// Numerators of a point of the coarser model `self` lifted to a finer model
    /// with the same lower level.
    pub fn lift_to(&self, finer: &Level, idx: usize) -> Result<usize, SchwartzError> {
        if finer.p != self.p || finer.m != self.m || finer.n < self.n {
            return Err(SchwartzError::Incompatible);
        }
        Ok(finer.encode(&self.decode(idx)))
    }

    /// The numerators of `ı(u⃗, v⃗) = [[u₁, v₂], [u₂, v₁]]`, row by row.
    pub fn imath(&self, idx: usize) -> [[i64; 2]; 2] {
        let [u1, u2, v1, v2] = self.decode(idx);
        [[u1, v2], [u2, v1]]
    }

    /// The point `ı^{−1}(m)` for a matrix of numerators.
    pub fn imath_inverse(&self, m: [[i64; 2]; 2]) -> usize {
        self.encode(&[m[0][0], m[1][0], m[1][1], m[0][1]])
    }

    /// Acts on a point by integral matrices: `(u⃗, v⃗) ↦ (A₁u⃗, A₂v⃗)`.
    pub fn apply(&self, idx: usize, a1: &[[i64; 2]; 2], a2: &[[i64; 2]; 2]) -> usize {
        let [u1, u2, v1, v2] = self.decode(idx);
        let md = self.modulus as i128;
        let lin = |r: &[i64; 2], x: i64, y: i64| {
            ((r[0] as i128 * x as i128 + r[1] as i128 * y as i128).rem_euclid(md)) as i64
        };
        self.encode(&[
            lin(&a1[0], u1, u2),
            lin(&a1[1], u1, u2),
            lin(&a2[0], v1, v2),
            lin(&a2[1], v1, v2),
        ])
    }
}

/// An integer-valued function on a finite model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSchwartz {
    level: Level,
    values: Vec<i64>,
}

impl FiniteSchwartz {
    /// The zero function.
    pub fn zero(level: Level) -> Self {
        FiniteSchwartz {
            level,
            values: vec![0; level.num_points()],
        }
    }

    /// A function from its values, one per point in index order.
    pub fn from_values(level: Level, values: Vec<i64>) -> Result<Self, SchwartzError> {
        if values.len() != level.num_points() {
            return Err(SchwartzError::Incompatible);
        }
        Ok(FiniteSchwartz { level, values })
    }

    /// A function given pointwise.
    pub fn from_fn(level: Level, f: impl Fn(usize) -> i64) -> Self {
        FiniteSchwartz {
            level,
            values: (0..level.num_points()).map(f).collect(),
        }
    }

    /// The characteristic function `φ_{(u,v,w,x)}` of `ϖ^uO × ϖ^vO × ϖ^wO × ϖ^xO`.
    ///
    /// `φ̄_{(u,v,w,x)}` is `box(−u, −v, −w, −x)`.
    pub fn box_fn(level: Level, exps: [i64; 4]) -> Result<Self, SchwartzError> {
        let (m, n) = (level.lower() as i64, level.upper() as i64);
        if let Some(&e) = exps.iter().find(|&&e| e < -m || e > n) {
            return Err(SchwartzError::LevelTooSmall {
                m: level.lower(),
                n: level.upper(),
                reason: format!("box exponent {e} outside [−M, N]"),
            });
        }
        let p = level.prime() as i64;
        let divisors: Vec<i64> = exps.iter().map(|&e| p.pow((e + m) as u32)).collect();
        Ok(FiniteSchwartz::from_fn(level, |i| {
            let c = level.decode(i);
            c.iter().zip(&divisors).all(|(&a, &d)| a % d == 0) as i64
        }))
    }

    /// The finite model.
    pub fn level(&self) -> Level {
        self.level
    }

    /// The values, in point order.
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// The value at a point.
    pub fn get(&self, idx: usize) -> i64 {
        self.values[idx]
    }

    /// The value at a point given by numerators.
    pub fn at(&self, coords: &[i64; 4]) -> i64 {
        self.values[self.level.encode(coords)]
    }

    /// Indices of the points where the function is nonzero.
    pub fn support(&self) -> Vec<usize> {
        (0..self.values.len()).filter(|&i| self.values[i] != 0).collect()
    }

    /// The smallest coordinate valuation on the support (`None` for the zero function).
    pub fn support_valuation(&self) -> Option<i64> {
        self.support()
            .into_iter()
            .map(|i| {
                self.level
                    .decode(i)
                    .iter()
                    .map(|&a| self.level.valuation(a))
                    .min()
                    .unwrap_or(0)
            })
            .min()
    }

    /// `self + c·other`.
    pub fn add_scaled(&self, other: &Self, c: i64) -> Result<Self, SchwartzError> {
        if self.level != other.level {
            return Err(SchwartzError::Incompatible);
        }
        Ok(FiniteSchwartz {
            level: self.level,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + c * b).collect(),
        })
    }

    /// `c·self`.
    pub fn scale(&self, c: i64) -> Self {
        FiniteSchwartz {
            level: self.level,
            values: self.values.iter().map(|a| c * a).collect(),
        }
    }

    /// Whether every value is divisible by `d` (always true for `d = ±1`).
    pub fn divisible_by(&self, d: i64) -> bool {
        d != 0 && self.values.iter().all(|v| v % d == 0)
    }

    /// The first point where the two functions differ, as an error.
    pub fn assert_eq(&self, other: &Self, what: &str) -> Result<(), SchwartzError> {
        if self.level != other.level {
            return Err(SchwartzError::Incompatible);
        }
        match (0..self.values.len()).find(|&i| self.values[i] != other.values[i]) {
            None => Ok(()),
            Some(i) => Err(SchwartzError::Mismatch {
                what: what.to_string(),
                point: self.level.decode(i).to_vec(),
                expected: other.values[i],
                found: self.values[i],
            }),
        }
    }

    /// JSON rendering as a point/value list over the support.
    pub fn to_json(&self) -> Value {
        json!({
            "p": self.level.prime(),
            "M": self.level.lower(),
            "N": self.level.upper(),
            "points": self.support().into_iter().map(|i| json!({
                "numerators": self.level.decode(i),
                "value": self.values[i],
            })).collect::<Vec<_>>(),
        })
    }
}
