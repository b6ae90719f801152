//! Finite actions of compact groups on finite models, with a cyclic character.
//!
//! A [`FiniteAction`] is a group `W` given by generators acting on the points of a finite
//! set, together with a character `χ: W → Z/d`. The normal subgroup is `V = ker χ`; the
//! only quotient that matters for traces is `W/V ≅ χ(W)`. For `x` a point,
//! `[V_x : V] = [Stab_W(x) : Stab_W(x) ∩ V] = |χ(Stab_W(x))|`, computed by Schreier
//! generators along an orbit search.

use std::collections::VecDeque;

use padic_models::LocalMatrix;

use crate::error::SchwartzError;
use crate::hecke::{to_int_matrix, IntMatrix, IntPair};
use crate::space::Level;

/// The character whose kernel is the subgroup `V`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Character {
    /// `V = W`.
    Trivial,
    /// `χ(h) = ν(h) mod ϖ ∈ 𝓀^×`, where `ν(h) = det h₁ = det h₂`; `V = ν^{−1}(1 + ϖO)`.
    DetModPi,
}

#[derive(Clone, Debug)]
enum Generators {
    Permutations(Vec<Vec<u32>>),
    Matrices {
        level: Level,
        pairs: Vec<(LocalMatrix, LocalMatrix)>,
        acting: Vec<IntPair>,
        character: Character,
    },
}

/// A group acting on the points of a finite set, with a character to `Z/d`.
#[derive(Clone, Debug)]
pub struct FiniteAction {
    points: usize,
    gens: Generators,
    chi: Vec<u64>,
    chi_order: u64,
}

/// Orbit data for one orbit: base point, members, Schreier transversal and stabilizer image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// The base point.
    pub base: usize,
    /// The points of the orbit, base first.
    pub points: Vec<usize>,
    /// For each point `y = x·w` of the orbit, `χ(w)` for the transversal word `w`.
    pub transversal: Vec<u64>,
    /// `χ(Stab_W(x))` is the subgroup of `Z/d` generated by this divisor of `d`.
    pub stabilizer_gcd: u64,
    /// `d`.
    pub chi_order: u64,
}

impl Orbit {
    /// `[V_x : V] = |χ(Stab_W(x))|`.
    pub fn stabilizer_index(&self) -> u64 {
        self.chi_order / self.stabilizer_gcd
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    let (mut r0, mut r1) = (a.rem_euclid(m) as i128, m as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    (r0 == 1).then(|| s0.rem_euclid(m as i128) as i64)
}

fn inverse_mod(a: &IntMatrix, m: i64) -> Option<IntMatrix> {
    let det = (a[0][0] as i128 * a[1][1] as i128 - a[0][1] as i128 * a[1][0] as i128).rem_euclid(m as i128);
    let di = mod_inverse(det as i64, m)? as i128;
    let f = |x: i64| ((x as i128 * di).rem_euclid(m as i128)) as i64;
    Some([[f(a[1][1]), f(-a[0][1])], [f(-a[1][0]), f(a[0][0])]])
}

/// Discrete logarithm of `a mod p` to a fixed primitive root.
fn discrete_log(a: i64, p: u32) -> u64 {
    let p = p as i64;
    if p == 2 {
        return 0;
    }
    let order = p - 1;
    let is_primitive = |g: i64| {
        let mut x = 1i64;
        (1..order).all(|_| {
            x = x * g % p;
            x != 1
        })
    };
    let g = (2..p).find(|&g| is_primitive(g)).expect("a primitive root exists");
    let target = a.rem_euclid(p);
    let mut x = 1i64;
    for k in 0..order {
        if x == target {
            return k as u64;
        }
        x = x * g % p;
    }
    panic!("{a} is not a unit mod {p}")
}

fn det2(g: &LocalMatrix) -> padic_models::LocalScalar {
    g.get(0, 0) * g.get(1, 1) - g.get(0, 1) * g.get(1, 0)
}

impl FiniteAction {
    /// An abstract action by permutations of `0..points`, with `χ(gen_i) = chi[i] ∈ Z/d`.
    pub fn from_permutations(
        points: usize,
        perms: Vec<Vec<u32>>,
        chi: Vec<u64>,
        chi_order: u64,
    ) -> Result<Self, SchwartzError> {
        let bad = perms.len() != chi.len()
            || chi_order == 0
            || perms.iter().any(|p| {
                let mut seen = vec![false; points];
                p.len() != points
                    || p.iter()
                        .any(|&j| j as usize >= points || std::mem::replace(&mut seen[j as usize], true))
            });
        if bad {
            return Err(SchwartzError::Unsupported("malformed permutation action".into()));
        }
        Ok(FiniteAction {
            points,
            gens: Generators::Permutations(perms),
            chi: chi.into_iter().map(|c| c % chi_order).collect(),
            chi_order,
        })
    }

    /// The group generated by integral pairs `(h₁, h₂)` with a common unit determinant,
    /// acting on the finite model by `(u⃗, v⃗)·h = (h₁^{−1}u⃗, h₂^{−1}v⃗)`.
    pub fn from_pairs(
        level: Level,
        pairs: Vec<(LocalMatrix, LocalMatrix)>,
        character: Character,
    ) -> Result<Self, SchwartzError> {
        let p = level.prime();
        let modulus = level.modulus();
        let mut acting = Vec::with_capacity(pairs.len());
        let mut chi = Vec::with_capacity(pairs.len());
        for (h1, h2) in &pairs {
            let (d1, d2) = (det2(h1), det2(h2));
            if d1 != d2 || d1.valuation() != Some(0) {
                return Err(SchwartzError::Unsupported(format!(
                    "generator ({h1}, {h2}) is not a common-determinant unit pair"
                )));
            }
            let (i1, i2) = (to_int_matrix(h1, modulus)?, to_int_matrix(h2, modulus)?);
            let not_unit = || SchwartzError::Unsupported("generator is not invertible over O".into());
            acting.push((
                inverse_mod(&i1, modulus).ok_or_else(not_unit)?,
                inverse_mod(&i2, modulus).ok_or_else(not_unit)?,
            ));
            chi.push(match character {
                Character::Trivial => 0,
                Character::DetModPi => {
                    let d = i1[0][0] as i128 * i1[1][1] as i128 - i1[0][1] as i128 * i1[1][0] as i128;
                    discrete_log(d.rem_euclid(p as i128) as i64, p)
                }
            });
        }
        let chi_order = match character {
            Character::Trivial => 1,
            Character::DetModPi => (p as u64 - 1).max(1),
        };
        Ok(FiniteAction {
            points: level.num_points(),
            gens: Generators::Matrices {
                level,
                pairs,
                acting,
                character,
            },
            chi,
            chi_order,
        })
    }

    /// The same group acting on the model with upper level `N + 1`, if geometric.
    pub fn refine(&self) -> Result<Option<Self>, SchwartzError> {
        match &self.gens {
            Generators::Permutations(_) => Ok(None),
            Generators::Matrices {
                level,
                pairs,
                character,
                ..
            } => Ok(Some(FiniteAction::from_pairs(
                level.refine()?,
                pairs.clone(),
                *character,
            )?)),
        }
    }

    /// The finite model, if geometric.
    pub fn level(&self) -> Option<Level> {
        match &self.gens {
            Generators::Matrices { level, .. } => Some(*level),
            Generators::Permutations(_) => None,
        }
    }

    /// Number of points acted on.
    pub fn num_points(&self) -> usize {
        self.points
    }

    /// Number of generators.
    pub fn num_generators(&self) -> usize {
        self.chi.len()
    }

    /// `d`, the order of the target of `χ`.
    pub fn chi_order(&self) -> u64 {
        self.chi_order
    }

    /// `χ` of a generator.
    pub fn chi(&self, g: usize) -> u64 {
        self.chi[g]
    }

    /// `[W : V] = |χ(W)|`.
    pub fn quotient_order(&self) -> u64 {
        self.chi_order / self.chi.iter().fold(self.chi_order, |acc, &c| gcd(acc, c))
    }

    /// `y·g` for a generator `g`.
    pub fn image(&self, g: usize, y: usize) -> usize {
        match &self.gens {
            Generators::Permutations(perms) => perms[g][y] as usize,
            Generators::Matrices { level, acting, .. } => level.apply(y, &acting[g].0, &acting[g].1),
        }
    }

    /// `y·(g₁⋯g_k)` for a word in the generators.
    pub fn image_word(&self, word: &[usize], y: usize) -> usize {
        word.iter().fold(y, |acc, &g| self.image(g, acc))
    }

    /// The orbit of `x` with its Schreier data.
    pub fn orbit(&self, x: usize) -> Orbit {
        let d = self.chi_order;
        let mut t: std::collections::HashMap<usize, u64> = std::collections::HashMap::new();
        let mut points = vec![x];
        let mut transversal = vec![0u64];
        t.insert(x, 0);
        let mut g_acc = d;
        let mut queue = VecDeque::from([x]);
        while let Some(y) = queue.pop_front() {
            let ty = t[&y];
            for g in 0..self.num_generators() {
                let z = self.image(g, y);
                let tz = (ty + self.chi[g]) % d;
                match t.get(&z) {
                    Some(&old) => g_acc = gcd(g_acc, (tz + d - old) % d),
                    None => {
                        t.insert(z, tz);
                        points.push(z);
                        transversal.push(tz);
                        queue.push_back(z);
                    }
                }
            }
        }
        Orbit {
            base: x,
            points,
            transversal,
            stabilizer_gcd: g_acc,
            chi_order: d,
        }
    }

    /// `[V_x : V]` at the working level.
    pub fn stabilizer_index(&self, x: usize) -> u64 {
        self.orbit(x).stabilizer_index()
    }

    /// `[V_x : V]`, re-checked on the model with upper level `N + 1` for geometric actions.
    pub fn stable_stabilizer_index(&self, x: usize) -> Result<u64, SchwartzError> {
        let here = self.stabilizer_index(x);
        if let (Some(level), Some(finer)) = (self.level(), self.refine()?) {
            let lifted = level.lift_to(&finer.level().expect("geometric"), x)?;
            let there = finer.stabilizer_index(lifted);
            if there != here {
                return Err(SchwartzError::LevelTooLow {
                    level: level.upper(),
                    at_level: here,
                    at_next: there,
                });
            }
        }
        Ok(here)
    }

    /// Words in the generators whose `χ`-values run once over `χ(W) ≅ W/V`.
    pub fn quotient_representatives(&self) -> Vec<Vec<usize>> {
        let d = self.chi_order as usize;
        let mut word_of: Vec<Option<Vec<usize>>> = vec![None; d];
        word_of[0] = Some(Vec::new());
        let mut queue = VecDeque::from([0usize]);
        while let Some(c) = queue.pop_front() {
            for g in 0..self.num_generators() {
                let nc = (c + self.chi[g] as usize) % d;
                if word_of[nc].is_none() {
                    let mut w = word_of[c].clone().expect("visited");
                    w.push(g);
                    word_of[nc] = Some(w);
                    queue.push_back(nc);
                }
            }
        }
        word_of.into_iter().flatten().collect()
    }
}

/// Unit generators of `(Z/p^L)^×` for every `L`: `2, …, p − 1`, `1 + p`, and `5` for `p = 2`.
fn unit_generators(p: i64) -> Vec<i64> {
    let mut us: Vec<i64> = (2..p).collect();
    us.push(1 + p);
    if p == 2 {
        us.push(5);
    }
    us
}

/// Generators of `H_{τ₁} = 𝒳°J` for GSp4: `ȷ(g) = (g, sgs)` for generators `g` of
/// `GL₂(O)`, and `(1, h)` for generators `h` of `SL₂(O) ∩ (1 + ϖM₂(O))`.
pub fn h_tau1_generators(p: u32) -> Vec<(LocalMatrix, LocalMatrix)> {
    let pi = p as i64;
    let m = |rows: [[i64; 2]; 2]| {
        LocalMatrix::from_int_rows(
            p,
            &rows
                .iter()
                .map(|r| r.iter().map(|&a| (a, 0)).collect())
                .collect::<Vec<_>>(),
        )
    };
    let s = |a: [[i64; 2]; 2]| [[a[1][1], a[1][0]], [a[0][1], a[0][0]]];
    let mut gl2 = vec![[[1, 1], [0, 1]], [[1, 0], [1, 1]]];
    for u in unit_generators(pi) {
        gl2.push([[u, 0], [0, 1]]);
        gl2.push([[1, 0], [0, u]]);
    }
    let mut out: Vec<_> = gl2.into_iter().map(|g| (m(g), m(s(g)))).collect();
    let mut congruence = Vec::new();
    for t in [pi, pi * pi] {
        congruence.push([[1, t], [0, 1]]);
        congruence.push([[1, 0], [t, 1]]);
        congruence.push([[1 + t, t], [-t, 1 - t]]);
    }
    if p == 2 {
        congruence.push([[-1, 0], [0, -1]]);
    }
    out.extend(congruence.into_iter().map(|h| (m([[1, 0], [0, 1]]), m(h))));
    out
}

/// `H_{τ₁}` acting on a finite model, with `V` the level subgroup `ν^{−1}(1 + ϖO)`.
pub fn h_tau1_action(level: Level) -> Result<FiniteAction, SchwartzError> {
    FiniteAction::from_pairs(level, h_tau1_generators(level.prime()), Character::DetModPi)
}
