//! The [`RootDatum`] type: roots, coroots, pairing, reflections and orderings.

use std::collections::{BTreeSet, VecDeque};

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::RootDatumError;
use crate::half::HalfInt;
use crate::linalg::solve_in_span;

/// A cocharacter, as integer coordinates.
pub type LatticeVector = Vec<i64>;

/// Serializable description of a root datum.
///
/// `params[i]` is the residue-degree exponent `d(α)` of the root subgroup of
/// `roots[i]` (its parameters live in a field of size `q^{d(α)}`); it defaults
/// to 1 for every root (the split case).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootDatumConfig {
    /// Display name.
    pub name: String,
    /// Rank of the cocharacter lattice.
    pub rank: usize,
    /// All roots, as character vectors.
    pub roots: Vec<Vec<i64>>,
    /// Coroots in bijection with `roots`.
    pub coroots: Vec<Vec<i64>>,
    /// Indices into `roots` of the simple roots, in the order `α₁, α₂, …`.
    pub simple: Vec<usize>,
    /// Optional residue-degree exponents, one per root.
    #[serde(default)]
    pub params: Option<Vec<u32>>,
}

/// A reduced, irreducible-or-not root datum with a chosen base.
///
/// The finite simple reflections are numbered `1..=l` in the order of
/// `simple`; number `0` is reserved for the affine reflection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    config: RootDatumConfig,
    params: Vec<u32>,
    positive: Vec<bool>,
    highest: Option<usize>,
    delta2: Vec<i64>,
    longest_word: Vec<usize>,
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl RootDatum {
    /// Validates a configuration and builds the datum.
    pub fn new(config: RootDatumConfig) -> Result<Self, RootDatumError> {
        let r = config.rank;
        let bad = |msg: String| Err(RootDatumError::InvalidDatum(msg));
        if config.roots.len() != config.coroots.len() {
            return bad("roots and coroots differ in number".into());
        }
        for v in config.roots.iter().chain(&config.coroots) {
            if v.len() != r {
                return Err(RootDatumError::RankMismatch(v.len(), r));
            }
        }
        let params = config.params.clone().unwrap_or_else(|| vec![1; config.roots.len()]);
        if params.len() != config.roots.len() {
            return bad("params must have one entry per root".into());
        }
        for (i, (a, c)) in config.roots.iter().zip(&config.coroots).enumerate() {
            if dot(c, a) != 2 {
                return bad(format!("root {i}: <coroot, root> = {} instead of 2", dot(c, a)));
            }
            let doubled: Vec<i64> = a.iter().map(|x| 2 * x).collect();
            if config.roots.contains(&doubled) {
                return bad(format!("root {i} has its double as a root; not reduced"));
            }
        }
        let root_set: BTreeSet<&Vec<i64>> = config.roots.iter().collect();
        for (a, c) in config.roots.iter().zip(&config.coroots) {
            for b in &config.roots {
                let k = dot(c, b);
                let img: Vec<i64> = b.iter().zip(a).map(|(x, y)| x - k * y).collect();
                if !root_set.contains(&img) {
                    return bad(format!("reflection in {a:?} does not permute the roots"));
                }
            }
        }
        let simple_roots: Vec<Vec<i64>> = config.simple.iter().map(|&i| config.roots[i].clone()).collect();
        let mut positive = Vec::with_capacity(config.roots.len());
        let mut heights = Vec::with_capacity(config.roots.len());
        for a in &config.roots {
            let x = solve_in_span(&simple_roots, a)
                .ok_or_else(|| RootDatumError::InvalidDatum(format!("root {a:?} not in span of simple roots")))?;
            if x.iter().any(|c| !c.is_integer()) {
                return bad(format!("root {a:?} is not an integral combination of simple roots"));
            }
            let pos = x.iter().all(|c| !c.is_negative());
            let neg = x.iter().all(|c| !c.is_positive());
            if !pos && !neg {
                return bad(format!("root {a:?} has mixed-sign simple-root coefficients"));
            }
            positive.push(pos);
            heights.push(x.iter().map(|c| c.to_integer()).sum::<i64>());
        }
        for (i, &p) in positive.iter().enumerate() {
            let neg: Vec<i64> = config.roots[i].iter().map(|x| -x).collect();
            let j = config.roots.iter().position(|b| *b == neg);
            match j {
                Some(j) if positive[j] != p && params[j] == params[i] => {}
                _ => return bad(format!("root {i} lacks a matching negative")),
            }
        }
        let highest = (0..config.roots.len())
            .filter(|&i| positive[i])
            .max_by_key(|&i| heights[i]);
        let mut delta2 = vec![0i64; r];
        for (i, a) in config.roots.iter().enumerate() {
            if positive[i] {
                for (d, x) in delta2.iter_mut().zip(a) {
                    *d += params[i] as i64 * x;
                }
            }
        }
        let mut datum = Self {
            config,
            params,
            positive,
            highest,
            delta2,
            longest_word: Vec::new(),
        };
        datum.longest_word = datum.compute_longest_word();
        Ok(datum)
    }

    /// Parses a JSON configuration and validates it.
    pub fn from_json_str(s: &str) -> Result<Self, RootDatumError> {
        let config: RootDatumConfig =
            serde_json::from_str(s).map_err(|e| RootDatumError::InvalidDatum(e.to_string()))?;
        Self::new(config)
    }

    /// The underlying configuration.
    pub fn config(&self) -> &RootDatumConfig {
        &self.config
    }

    /// Display name.
    pub fn name(&self) -> &str {
        &self.config.name
    }

    /// Rank of the cocharacter lattice.
    pub fn rank(&self) -> usize {
        self.config.rank
    }

    /// Number of simple roots `l`.
    pub fn num_simple(&self) -> usize {
        self.config.simple.len()
    }

    /// All roots.
    pub fn roots(&self) -> &[Vec<i64>] {
        &self.config.roots
    }

    /// All coroots.
    pub fn coroots(&self) -> &[Vec<i64>] {
        &self.config.coroots
    }

    /// Root `α_i` for simple label `i ∈ 1..=l`.
    pub fn simple_root(&self, i: usize) -> &[i64] {
        &self.config.roots[self.config.simple[i - 1]]
    }

    /// Coroot `α_i∨` for simple label `i ∈ 1..=l`.
    pub fn simple_coroot(&self, i: usize) -> &[i64] {
        &self.config.coroots[self.config.simple[i - 1]]
    }

    /// Index into `roots()` of the simple root with label `i`.
    pub fn simple_index(&self, i: usize) -> usize {
        self.config.simple[i - 1]
    }

    /// Whether `roots()[i]` is positive.
    pub fn is_positive(&self, i: usize) -> bool {
        self.positive[i]
    }

    /// Indices of the positive roots.
    pub fn positive_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.config.roots.len()).filter(|&i| self.positive[i])
    }

    /// Residue-degree exponent `d(α)` of `roots()[i]`.
    pub fn param(&self, i: usize) -> u32 {
        self.params[i]
    }

    /// Index of the highest root (maximal height), if there are roots.
    pub fn highest_root(&self) -> Option<usize> {
        self.highest
    }

    /// Position of a character in the root list.
    pub fn root_index(&self, chi: &[i64]) -> Option<usize> {
        self.config.roots.iter().position(|a| a == chi)
    }

    /// Twice the half-sum `δ = ½ Σ_{α>0} d(α) α`.
    pub fn delta_twice(&self) -> &[i64] {
        &self.delta2
    }

    fn check_rank(&self, v: &[i64]) -> Result<(), RootDatumError> {
        if v.len() == self.rank() {
            Ok(())
        } else {
            Err(RootDatumError::RankMismatch(v.len(), self.rank()))
        }
    }

    /// The integral pairing `⟨λ, χ⟩`.
    pub fn pair(&self, lambda: &[i64], chi: &[i64]) -> Result<i64, RootDatumError> {
        self.check_rank(lambda)?;
        self.check_rank(chi)?;
        Ok(dot(lambda, chi))
    }

    /// The half-integral pairing `⟨λ, δ⟩`.
    pub fn pair_delta(&self, lambda: &[i64]) -> Result<HalfInt, RootDatumError> {
        self.check_rank(lambda)?;
        Ok(HalfInt::from_twice(dot(lambda, &self.delta2)))
    }

    /// `s_α(λ) = λ − ⟨λ,α⟩α∨` for `α = roots()[i]`.
    pub fn reflect(&self, v: &[i64], i: usize) -> LatticeVector {
        let a = &self.config.roots[i];
        let c = &self.config.coroots[i];
        let k = dot(v, a);
        v.iter().zip(c).map(|(x, y)| x - k * y).collect()
    }

    /// `s_α(χ) = χ − ⟨α∨,χ⟩α` on characters, for `α = roots()[i]`.
    pub fn reflect_character(&self, chi: &[i64], i: usize) -> Vec<i64> {
        let a = &self.config.roots[i];
        let c = &self.config.coroots[i];
        let k = dot(c, chi);
        chi.iter().zip(a).map(|(x, y)| x - k * y).collect()
    }

    /// The simple reflection with label `i ∈ 1..=l` applied to a cocharacter.
    pub fn simple_reflect(&self, v: &[i64], i: usize) -> LatticeVector {
        self.reflect(v, self.simple_index(i))
    }

    /// True when `⟨λ, α⟩ ≥ 0` for every simple root.
    pub fn is_dominant(&self, lambda: &[i64]) -> bool {
        (1..=self.num_simple()).all(|i| dot(lambda, self.simple_root(i)) >= 0)
    }

    /// True when `⟨λ, α⟩ = 0` for every root.
    pub fn is_central(&self, lambda: &[i64]) -> bool {
        self.config.roots.iter().all(|a| dot(lambda, a) == 0)
    }

    /// True iff `λ − μ` is a non-negative integer combination of simple coroots.
    pub fn succeq(&self, lambda: &[i64], mu: &[i64]) -> bool {
        self.simple_coroot_coeffs(lambda, mu)
            .is_some_and(|c| c.iter().all(|&x| x >= 0))
    }

    /// Integer coefficients of `λ − μ` in the simple coroots, if it lies in their integral span.
    pub fn simple_coroot_coeffs(&self, lambda: &[i64], mu: &[i64]) -> Option<Vec<i64>> {
        if lambda.len() != self.rank() || mu.len() != self.rank() {
            return None;
        }
        let diff: Vec<i64> = lambda.iter().zip(mu).map(|(a, b)| a - b).collect();
        let cols: Vec<Vec<i64>> = (1..=self.num_simple())
            .map(|i| self.simple_coroot(i).to_vec())
            .collect();
        let x = solve_in_span(&cols, &diff)?;
        if x.iter().all(|c| c.is_integer()) {
            Some(x.iter().map(|c| c.to_integer()).collect())
        } else {
            None
        }
    }

    /// The dominant element of the Weyl orbit of `λ`.
    pub fn dominant_rep(&self, lambda: &[i64]) -> LatticeVector {
        let mut v = lambda.to_vec();
        while let Some(i) = (1..=self.num_simple()).find(|&i| dot(&v, self.simple_root(i)) < 0) {
            v = self.simple_reflect(&v, i);
        }
        v
    }

    /// The Weyl orbit `Wλ`, sorted.
    pub fn orbit(&self, lambda: &[i64]) -> BTreeSet<LatticeVector> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([lambda.to_vec()]);
        seen.insert(lambda.to_vec());
        while let Some(v) = queue.pop_front() {
            for i in 1..=self.num_simple() {
                let w = self.simple_reflect(&v, i);
                if seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    fn compute_longest_word(&self) -> Vec<usize> {
        // 2ρ∨ pairs to 2 with every simple root, so it is strictly dominant;
        // walking it to the antidominant chamber spells a reduced word of w∘.
        let mut x = vec![0i64; self.rank()];
        for i in self.positive_indices() {
            for (a, b) in x.iter_mut().zip(&self.config.coroots[i]) {
                *a += b;
            }
        }
        let mut word = Vec::new();
        while let Some(i) = (1..=self.num_simple()).find(|&i| dot(&x, self.simple_root(i)) > 0) {
            x = self.simple_reflect(&x, i);
            word.push(i);
        }
        word.reverse();
        word
    }

    /// A reduced word (labels `1..=l`) for the longest element `w∘`, applied right to left.
    pub fn longest_word(&self) -> &[usize] {
        &self.longest_word
    }

    /// `λ^opp = w∘λ`.
    pub fn opp(&self, lambda: &[i64]) -> LatticeVector {
        let mut v = lambda.to_vec();
        for &i in self.longest_word.iter().rev() {
            v = self.simple_reflect(&v, i);
        }
        v
    }

    /// True when `w∘` acts as `−1` on the roots.
    pub fn longest_is_minus_one(&self) -> bool {
        (1..=self.num_simple()).all(|i| {
            let idx = self.simple_index(i);
            let mut chi = self.config.roots[idx].clone();
            for &j in self.longest_word.iter().rev() {
                chi = self.reflect_character(&chi, self.simple_index(j));
            }
            chi.iter().zip(&self.config.roots[idx]).all(|(a, b)| *a == -b)
        })
    }

    /// True iff every root pairs with `λ` into `{−1, 0, 1}`.
    pub fn is_minuscule(&self, lambda: &[i64]) -> Result<bool, RootDatumError> {
        if !self.is_dominant(lambda) {
            return Err(RootDatumError::NotDominant(lambda.to_vec()));
        }
        Ok(self.config.roots.iter().all(|a| dot(lambda, a).abs() <= 1))
    }

    /// All dominant `μ` with `λ ⪰ μ`, sorted.
    ///
    /// Enumerates `λ − Σ n_β β∨` over the box `0 ≤ n_β ≤ ⟨λ, 2δ⟩`; since
    /// `⟨β∨, 2δ⟩ ≥ 1` for simple `β` and `⟨μ, 2δ⟩ ≥ 0` for dominant `μ`, every
    /// coefficient of a dominant `μ ⪯ λ` lies in the box.
    pub fn dominant_support(&self, lambda: &[i64]) -> Result<BTreeSet<LatticeVector>, RootDatumError> {
        self.check_rank(lambda)?;
        if !self.is_dominant(lambda) {
            return Err(RootDatumError::NotDominant(lambda.to_vec()));
        }
        let bound = dot(lambda, &self.delta2).max(0);
        let l = self.num_simple();
        let mut out = BTreeSet::new();
        let mut n = vec![0i64; l];
        loop {
            let mut mu = lambda.to_vec();
            for (k, &c) in n.iter().enumerate() {
                for (m, b) in mu.iter_mut().zip(self.simple_coroot(k + 1)) {
                    *m -= c * b;
                }
            }
            if self.is_dominant(&mu) {
                out.insert(mu);
            }
            let mut k = 0;
            loop {
                if k == l {
                    return Ok(out);
                }
                n[k] += 1;
                if n[k] <= bound {
                    break;
                }
                n[k] = 0;
                k += 1;
            }
        }
    }
}
