//! The extended affine (Iwahori–)Weyl group `Λ ⋊ W`, its length function,
//! reduced words over `S_aff ∪ Ω`, and minimal coset representatives.
//!
//! A torus element `ϖ^λ` is identified with the translation `t(−λ)`. The base
//! alcove is `{x : 0 < ⟨x,α⟩ < 1 for all α > 0}`, so the affine simple
//! reflection is `s₀ = t(α₀∨)s_{α₀}` for the highest root `α₀`.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use exact_algebra::HalfPowerLaurent;
use root_datum::{Preset, RootDatum};

use crate::error::WeylError;
use crate::finite::{identity, mat_mul, mat_vec, reflection_matrix, Mat, WeylGroup};

/// An element `t(λ)w` of the extended affine Weyl group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtAffineElement {
    /// Translation part `λ`.
    pub translation: Vec<i64>,
    /// Finite part `w`, as a matrix on cocharacters.
    pub finite: Mat,
}

impl ExtAffineElement {
    /// The identity of rank `r`.
    pub fn identity(r: usize) -> Self {
        Self {
            translation: vec![0; r],
            finite: identity(r),
        }
    }

    /// The pure translation `t(λ)`.
    pub fn translation(lambda: &[i64]) -> Self {
        Self {
            translation: lambda.to_vec(),
            finite: identity(lambda.len()),
        }
    }

    /// The image of the torus element `ϖ^λ`, namely `t(−λ)`.
    pub fn from_cocharacter(lambda: &[i64]) -> Self {
        Self::translation(&lambda.iter().map(|x| -x).collect::<Vec<_>>())
    }

    /// A finite Weyl group element `w`.
    pub fn finite_part(m: &Mat) -> Self {
        Self {
            translation: vec![0; m.len()],
            finite: m.clone(),
        }
    }

    /// Composition `(λ,w)(μ,v) = (λ + wμ, wv)`.
    pub fn mul(&self, other: &Self) -> Self {
        let wm = mat_vec(&self.finite, &other.translation);
        Self {
            translation: self.translation.iter().zip(wm).map(|(a, b)| a + b).collect(),
            finite: mat_mul(&self.finite, &other.finite),
        }
    }

    /// Inverse `(−w⁻¹λ, w⁻¹)`.
    pub fn inverse(&self) -> Self {
        let inv = invert_unimodular(&self.finite);
        let t = mat_vec(&inv, &self.translation);
        Self {
            translation: t.into_iter().map(|x| -x).collect(),
            finite: inv,
        }
    }

    /// Integer power (negative powers use the inverse).
    pub fn pow(&self, k: i64) -> Self {
        let base = if k >= 0 { self.clone() } else { self.inverse() };
        (0..k.unsigned_abs()).fold(Self::identity(self.translation.len()), |acc, _| acc.mul(&base))
    }

    /// Action on the apartment: `x ↦ λ + wx`.
    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        mat_vec(&self.finite, x)
            .into_iter()
            .zip(&self.translation)
            .map(|(a, b)| a + b)
            .collect()
    }

    /// True when the finite part is the identity.
    pub fn is_translation(&self) -> bool {
        self.finite == identity(self.finite.len())
    }
}

/// Inverse of a finite-order integer matrix, by repeated multiplication.
fn invert_unimodular(m: &Mat) -> Mat {
    let id = identity(m.len());
    let mut acc = m.clone();
    let mut prev = id.clone();
    for _ in 0..10_000 {
        if acc == id {
            return prev;
        }
        prev = acc.clone();
        acc = mat_mul(&acc, m);
    }
    panic!("finite part of an affine Weyl element must have finite order")
}

/// A reduced expression `s_{i₁} ⋯ s_{i_k} · ω` with `ω` of length zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineWord {
    /// Generator labels (`0` is the affine reflection), left to right.
    pub letters: Vec<usize>,
    /// The length-zero remainder `ω`.
    pub omega: ExtAffineElement,
    /// `ω = ρ^{rho_power} · t(central)`.
    pub rho_power: i64,
    /// Central translation part of `ω` beyond the power of `ρ`.
    pub central: Vec<i64>,
}

impl fmt::Display for AffineWord {
    /// Renders e.g. `w0w1w0ρ^4`; a central remainder `t(c)` is printed as `ϖ^(−c)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for l in &self.letters {
            out.push_str(&format!("w{l}"));
        }
        match self.rho_power {
            0 => {}
            1 => out.push('ρ'),
            k => out.push_str(&format!("ρ^{k}")),
        }
        if self.central.iter().any(|&x| x != 0) {
            let c: Vec<String> = self.central.iter().map(|x| (-x).to_string()).collect();
            out.push_str(&format!("ϖ^({})", c.join(",")));
        }
        if out.is_empty() {
            out.push('1');
        }
        write!(f, "{out}")
    }
}

/// A minimal coset representative with its length and reduced word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rep {
    /// The element.
    pub element: ExtAffineElement,
    /// Its affine length.
    pub length: usize,
    /// Its canonical reduced word.
    pub word: Vec<usize>,
}

/// The extended affine Weyl group of a root datum with a chosen generator `ρ` of `Ω`
/// modulo central translations.
#[derive(Clone, Debug)]
pub struct AffineWeyl {
    group: WeylGroup,
    gens: Vec<ExtAffineElement>,
    params: Vec<u32>,
    rho: ExtAffineElement,
    rho_order: usize,
}

impl AffineWeyl {
    /// Builds the structure for a root datum with irreducible root system and a
    /// length-zero element `ρ`.
    pub fn new(datum: &RootDatum, rho: ExtAffineElement) -> Self {
        let group = WeylGroup::new(datum);
        let h = datum.highest_root().expect("root system must be nonempty");
        let s0 = ExtAffineElement {
            translation: datum.coroots()[h].clone(),
            finite: reflection_matrix(datum, h),
        };
        let mut gens = vec![s0];
        let mut params = vec![datum.param(h)];
        for i in 1..=datum.num_simple() {
            gens.push(ExtAffineElement::finite_part(group.simple_matrix(i)));
            params.push(datum.param(datum.simple_index(i)));
        }
        let mut this = Self {
            group,
            gens,
            params,
            rho: rho.clone(),
            rho_order: 1,
        };
        let mut p = rho;
        while !(p.is_translation() && this.group.datum().is_central(&p.translation)) {
            p = p.mul(&this.rho);
            this.rho_order += 1;
        }
        this
    }

    /// The structure for a built-in preset, with its standard `ρ`.
    pub fn for_preset(preset: Preset) -> Self {
        let datum = preset.datum();
        let r = datum.rank();
        let rho = match preset {
            Preset::Gl2 => ExtAffineElement {
                translation: vec![0, -1],
                finite: vec![vec![0, 1], vec![1, 0]],
            },
            Preset::Gln(n) => {
                // diag entry i of the conjugate is t_{i+1}: (a₁,…,a_n) ↦ (a₂,…,a_n,a₁).
                let mut m = vec![vec![0i64; r]; r];
                m[0][0] = 1;
                for i in 1..=n {
                    let src = if i == n { 1 } else { i + 1 };
                    m[i][src] = 1;
                }
                let mut t = vec![0i64; r];
                t[n] = -1;
                ExtAffineElement {
                    translation: t,
                    finite: m,
                }
            }
            Preset::Gsp4 | Preset::Gu4 => {
                let g = WeylGroup::new(&datum);
                ExtAffineElement {
                    translation: vec![-1, 0, 0],
                    finite: g.word_matrix(&[2, 1, 2]),
                }
            }
        };
        Self::new(&datum, rho)
    }

    /// The finite Weyl group.
    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    /// The root datum.
    pub fn datum(&self) -> &RootDatum {
        self.group.datum()
    }

    /// Number of affine generators `|S_aff| = l + 1`.
    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    /// The generator with label `i` (`0` is affine).
    pub fn generator(&self, i: usize) -> Result<&ExtAffineElement, WeylError> {
        self.gens.get(i).ok_or(WeylError::UnknownGenerator(i))
    }

    /// Residue-degree exponent `d(s_i)`.
    pub fn param_exp(&self, i: usize) -> u32 {
        self.params[i]
    }

    /// All residue-degree exponents indexed by label.
    pub fn param_exps(&self) -> &[u32] {
        &self.params
    }

    /// The chosen length-zero element `ρ`.
    pub fn rho(&self) -> &ExtAffineElement {
        &self.rho
    }

    /// Smallest `k > 0` with `ρ^k` a central translation.
    pub fn rho_order(&self) -> usize {
        self.rho_order
    }

    /// Number of affine root hyperplanes separating the base alcove from its image.
    ///
    /// Equals `Σ_{α>0, w⁻¹α>0} |⟨λ,α⟩| + Σ_{α>0, w⁻¹α<0} |⟨λ,α⟩ − 1|` for `u = t(λ)w`.
    pub fn length(&self, u: &ExtAffineElement) -> usize {
        let d = self.datum();
        d.positive_indices()
            .map(|i| {
                let k: i64 = u.translation.iter().zip(&d.roots()[i]).map(|(a, b)| a * b).sum();
                if self.group.inverse_keeps_positive(&u.finite, i) {
                    k.unsigned_abs() as usize
                } else {
                    (k - 1).unsigned_abs() as usize
                }
            })
            .sum()
    }

    /// `Σ_{⟨λ,α⟩≤0} |⟨λ,α⟩| + Σ_{⟨λ,α⟩>0} (⟨λ,α⟩ − 1)` over positive roots: the
    /// closed form for the minimal length in `t(λ)W`.
    pub fn min_length_formula(&self, lambda: &[i64]) -> usize {
        let d = self.datum();
        d.positive_indices()
            .map(|i| {
                let k = d.pair(lambda, &d.roots()[i]).expect("rank checked by caller");
                if k <= 0 {
                    k.unsigned_abs() as usize
                } else {
                    (k - 1) as usize
                }
            })
            .sum()
    }

    /// The canonical reduced word: repeatedly strip the lowest-labelled left descent.
    pub fn reduced_word(&self, u: &ExtAffineElement) -> AffineWord {
        let mut cur = u.clone();
        let mut len = self.length(&cur);
        let mut letters = Vec::new();
        while len > 0 {
            let (i, next, nlen) = self
                .gens
                .iter()
                .enumerate()
                .map(|(i, g)| {
                    let n = g.mul(&cur);
                    let l = self.length(&n);
                    (i, n, l)
                })
                .find(|(_, _, l)| *l < len)
                .expect("a nontrivial element has a left descent");
            letters.push(i);
            cur = next;
            len = nlen;
        }
        let (rho_power, central) = self.omega_decompose(&cur);
        AffineWord {
            letters,
            omega: cur,
            rho_power,
            central,
        }
    }

    /// Writes a length-zero element as `ρ^k · t(c)` with `c` central, preferring `c = 0`.
    fn omega_decompose(&self, omega: &ExtAffineElement) -> (i64, Vec<i64>) {
        let datum = self.datum();
        let r = datum.rank();
        let z = self.rho.pow(self.rho_order as i64).translation;
        for k in 0..self.rho_order as i64 {
            let rest = self.rho.pow(-k).mul(omega);
            if rest.is_translation() && datum.is_central(&rest.translation) {
                let c = rest.translation;
                if let Some(m) = integer_multiple(&c, &z) {
                    return (k + m * self.rho_order as i64, vec![0; r]);
                }
                return (k, c);
            }
        }
        (0, omega.translation.clone())
    }

    /// Applies a word of generator labels followed by `ρ^k`.
    pub fn word_element(&self, letters: &[usize], rho_power: i64) -> ExtAffineElement {
        let r = self.datum().rank();
        letters
            .iter()
            .fold(ExtAffineElement::identity(r), |acc, &i| acc.mul(&self.gens[i]))
            .mul(&self.rho.pow(rho_power))
    }

    /// The unique minimal-length element of `t(μ)W`.
    pub fn min_in_right_coset(&self, mu: &[i64]) -> ExtAffineElement {
        self.group
            .elements()
            .iter()
            .map(|w| ExtAffineElement {
                translation: mu.to_vec(),
                finite: w.matrix.clone(),
            })
            .min_by_key(|u| self.length(u))
            .expect("nonempty group")
    }

    /// The minimal element of `t(−λ^opp)W`.
    pub fn min_rep_right(&self, lambda: &[i64]) -> ExtAffineElement {
        let mu: Vec<i64> = self.datum().opp(lambda).into_iter().map(|x| -x).collect();
        self.min_in_right_coset(&mu)
    }

    /// The minimal element `w` of the double coset `W t(−λ) W`, so that `Kϖ^λK = KwK`.
    pub fn min_rep_double(&self, lambda: &[i64]) -> Result<ExtAffineElement, WeylError> {
        if !self.datum().is_dominant(lambda) {
            return Err(WeylError::NotDominant(lambda.to_vec()));
        }
        let neg: Vec<i64> = lambda.iter().map(|x| -x).collect();
        let best = self
            .datum()
            .orbit(&neg)
            .into_iter()
            .map(|mu| self.min_in_right_coset(&mu))
            .min_by_key(|u| self.length(u))
            .expect("nonempty orbit");
        Ok(best)
    }

    /// Enumerates the subgroup generated by the labelled generators (must be finite).
    pub fn generated_subgroup(&self, labels: &[usize]) -> Result<Vec<ExtAffineElement>, WeylError> {
        const BUDGET: usize = 200_000;
        for &l in labels {
            self.generator(l)?;
        }
        let r = self.datum().rank();
        let id = ExtAffineElement::identity(r);
        let mut seen = HashMap::from([(id.clone(), ())]);
        let mut out = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(u) = queue.pop_front() {
            for &l in labels {
                let v = u.mul(&self.gens[l]);
                if seen.insert(v.clone(), ()).is_none() {
                    if out.len() >= BUDGET {
                        return Err(WeylError::InfiniteSubgroup(labels.to_vec()));
                    }
                    out.push(v.clone());
                    queue.push_back(v);
                }
            }
        }
        Ok(out)
    }

    /// Minimal-length representatives of `W_X / W_Z` for `Z ⊆ X`, sorted by length then word.
    pub fn parabolic_min_reps(&self, x: &[usize], z: &[usize]) -> Result<Vec<Rep>, WeylError> {
        if !z.iter().all(|l| x.contains(l)) {
            return Err(WeylError::NotSubset(z.to_vec(), x.to_vec()));
        }
        let elems = self.generated_subgroup(x)?;
        let mut reps: Vec<Rep> = elems
            .into_iter()
            .filter_map(|u| {
                let len = self.length(&u);
                let minimal = z.iter().all(|&s| self.length(&u.mul(&self.gens[s])) > len);
                minimal.then(|| Rep {
                    word: self.reduced_word(&u).letters,
                    element: u,
                    length: len,
                })
            })
            .collect();
        reps.sort_by(|a, b| (a.length, &a.word).cmp(&(b.length, &b.word)));
        Ok(reps)
    }

    /// `Σ_rep q^{Σ_{s in word} d(s)}` using the group's residue-degree exponents.
    pub fn poincare(&self, reps: &[Rep]) -> HalfPowerLaurent {
        poincare(reps, &self.params)
    }

    /// The generator `ωs_iω⁻¹` for a length-zero `ω`.
    pub fn omega_conjugate(&self, omega: &ExtAffineElement, i: usize) -> Result<usize, WeylError> {
        let len = self.length(omega);
        if len != 0 {
            return Err(WeylError::NotLengthZero(len));
        }
        let conj = omega.mul(self.generator(i)?).mul(&omega.inverse());
        self.gens
            .iter()
            .position(|g| *g == conj)
            .ok_or(WeylError::NotAGenerator(i))
    }
}

/// `Σ_rep q^{Σ_{s in word} d(s)}` for explicit residue-degree exponents indexed by label.
pub fn poincare(reps: &[Rep], params: &[u32]) -> HalfPowerLaurent {
    reps.iter().fold(HalfPowerLaurent::zero(), |acc, r| {
        let e: i64 = r.word.iter().map(|&s| params[s] as i64).sum();
        acc + HalfPowerLaurent::q_pow(e)
    })
}

fn integer_multiple(c: &[i64], z: &[i64]) -> Option<i64> {
    if c.iter().all(|&x| x == 0) {
        return Some(0);
    }
    let (k, &zk) = z.iter().enumerate().find(|(_, &v)| v != 0)?;
    if c[k] % zk != 0 {
        return None;
    }
    let m = c[k] / zk;
    c.iter().zip(z).all(|(a, b)| *a == m * b).then_some(m)
}
