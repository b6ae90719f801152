//! Mixed double cosets `U \ KwK / K` for a block subgroup `H` with `U = H ∩ K`.
//!
//! Classes are written `Uϖ^λτ_iK` with `τ_i` drawn from a short list of fixed
//! matrices per group (their concrete entries live with the p-adic models).
//! Each class records its degree `deg [Uϖ^λτ_iK]_* = |Uϖ^λτ_iK / K|` when it is
//! known symbolically, and the layer index `d_α` attached to `τ_i`.

use exact_algebra::{BigInt, HalfPowerLaurent};
use root_datum::Preset;
use serde_json::{json, Value};
use weyl_engine::AffineWeyl;

use crate::error::DecomposeError;

/// The layer index `d_α` of a class: the index of the layer subgroup in the stabilizer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LayerIndex {
    /// Index one: divisibility holds trivially.
    One,
    /// Index `q − 1` (tested modulo `q^{1/2} − 1`).
    QMinusOne,
    /// Index `q + 1` (tested at `q = −1`).
    QPlusOne,
}

impl LayerIndex {
    /// The index as a Laurent polynomial.
    pub fn as_laurent(self) -> HalfPowerLaurent {
        match self {
            LayerIndex::One => HalfPowerLaurent::one(),
            LayerIndex::QMinusOne => HalfPowerLaurent::from_q_coeffs(&[-1, 1]),
            LayerIndex::QPlusOne => HalfPowerLaurent::from_q_coeffs(&[1, 1]),
        }
    }

    /// The value of `q` at which membership in `d_α·𝒪` is tested, if any.
    pub fn test_point(self) -> Option<i8> {
        match self {
            LayerIndex::One => None,
            LayerIndex::QMinusOne => Some(1),
            LayerIndex::QPlusOne => Some(-1),
        }
    }

    /// The index at `q = p`.
    pub fn at_prime(self, p: i64) -> i64 {
        match self {
            LayerIndex::One => 1,
            LayerIndex::QMinusOne => p - 1,
            LayerIndex::QPlusOne => p + 1,
        }
    }
}

/// One class `Uϖ^λτ_iK`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedClass {
    /// The cocharacter `λ`.
    pub lambda: Vec<i64>,
    /// The index `i` of `τ_i`.
    pub tau_index: usize,
    /// `[H ∩ σKσ⁻¹ : U ∩ σKσ⁻¹]` for `σ = ϖ^λτ_i`, when known symbolically.
    pub degree: Option<HalfPowerLaurent>,
    /// The layer index of `τ_i`.
    pub layer: LayerIndex,
}

/// The classes of one Hecke operator `KwK`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedClassTable {
    /// The dominant cocharacter of the operator.
    pub operator: Vec<i64>,
    /// The minimal word of the operator.
    pub word: String,
    /// The classes.
    pub classes: Vec<MixedClass>,
}

impl MixedClassTable {
    /// JSON rendering.
    pub fn to_json(&self) -> Value {
        json!({
            "operator": self.operator,
            "word": self.word,
            "classes": self.classes.iter().map(|c| json!({
                "lambda": c.lambda,
                "tau": c.tau_index,
                "degree": c.degree.as_ref().map(|d| d.to_string()),
                "layer": c.layer.as_laurent().to_string(),
            })).collect::<Vec<_>>(),
        })
    }

    /// Sum of the known degrees, or `None` if some degree is unknown.
    pub fn degree_sum(&self) -> Option<HalfPowerLaurent> {
        self.classes.iter().try_fold(HalfPowerLaurent::zero(), |acc, c| {
            c.degree.as_ref().map(|d| acc + d.clone())
        })
    }
}

/// `(k₁, k₂)` with `k₁ + k₂ = k` and `0 ≤ k₁, k₂ ≤ m`, in increasing `k₁`.
pub fn partitions(m: usize, k: usize) -> Vec<(usize, usize)> {
    (0..=m.min(k))
        .filter(|&k1| k - k1 <= m)
        .map(|k1| (k1, k - k1))
        .collect()
}

/// `l(κ) = min(k₁, m − k₂)`.
pub fn l_kappa(m: usize, kappa: (usize, usize)) -> usize {
    kappa.0.min(m - kappa.1)
}

/// `λ_κ = f_1 + … + f_{k₁} + f_{2m−k₂+1} + … + f_{2m}` in `G_m × GL_{2m}` coordinates,
/// with `G_m` component `k₁ + k₂` (the class lives in `Kϱ^kK` with `ϱ = ϖ^{f₀}ρ`).
pub fn lambda_kappa(m: usize, kappa: (usize, usize)) -> Vec<i64> {
    let (k1, k2) = kappa;
    let mut v = vec![0i64; 2 * m + 1];
    v[0] = (k1 + k2) as i64;
    for x in v.iter_mut().skip(1).take(k1) {
        *x = 1;
    }
    for x in v.iter_mut().skip(2 * m - k2 + 1) {
        *x = 1;
    }
    v
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    (0..k).fold(BigInt::from(1), |acc, i| {
        acc * BigInt::from(n - i) / BigInt::from(i + 1)
    })
}

/// `deg [Uϖ^{λ_κ}τ_rK]_*` for `GL_{2m}`: the Poincaré polynomial of
/// `[W_{H,r} / W_{κ,r}]`, with its residue at `q = 1` and the binomial prediction
/// `C(m−r, m−k₁)·C(m−r, k₂)`.
///
/// `W_{H,r}` is generated by `s_{r+1}, …, s_{m−1}, s_{m+r+1}, …, s_{2m−1}` and
/// `W_{κ,r}` omits `s_{k₁}` and `s_{2m−k₂}` from that list.
pub fn gln_mixed_degree(
    m: usize,
    kappa: (usize, usize),
    r: usize,
) -> Result<(HalfPowerLaurent, BigInt, BigInt), DecomposeError> {
    let (k1, k2) = kappa;
    if m == 0 || k1 > m || k2 > m || r > l_kappa(m, kappa) {
        return Err(DecomposeError::InvalidParameters(format!(
            "need κ ∈ P_k and r ≤ l(κ); got m = {m}, κ = ({k1},{k2}), r = {r}"
        )));
    }
    let aw = AffineWeyl::for_preset(Preset::Gln(2 * m));
    let x: Vec<usize> = ((r + 1)..m).chain((m + r + 1)..(2 * m)).collect();
    let z: Vec<usize> = x.iter().copied().filter(|&s| s != k1 && s != 2 * m - k2).collect();
    let reps = aw.parabolic_min_reps(&x, &z)?;
    let poly = aw.poincare(&reps);
    let residue = poly.residue_at(1).expect("integral Poincaré polynomial");
    let predicted = binomial(m - r, m - k1) * binomial(m - r, k2);
    Ok((poly, residue, predicted))
}

fn gln_layer(m: usize, i: usize) -> LayerIndex {
    if i < m {
        LayerIndex::QMinusOne
    } else {
        LayerIndex::One
    }
}

/// The classes of `Kϱ^kK` in `G_m × GL_{2m}`: `{ϖ^{λ_κ}τ_i : κ ∈ P_k, 0 ≤ i ≤ l(κ)}`.
pub fn gln_mixed_table(m: usize, k: usize) -> Result<MixedClassTable, DecomposeError> {
    if m == 0 || k > 2 * m {
        return Err(DecomposeError::InvalidParameters(format!(
            "need 0 <= k <= 2m, got m = {m}, k = {k}"
        )));
    }
    let mut classes = Vec::new();
    for kappa in partitions(m, k) {
        for i in 0..=l_kappa(m, kappa) {
            let (degree, _, _) = gln_mixed_degree(m, kappa, i)?;
            classes.push(MixedClass {
                lambda: lambda_kappa(m, kappa),
                tau_index: i,
                degree: Some(degree),
                layer: gln_layer(m, i),
            });
        }
    }
    let mut operator = vec![0i64; 2 * m + 1];
    operator[0] = k as i64;
    for x in operator.iter_mut().skip(1).take(k) {
        *x = 1;
    }
    let word = match k {
        0 => "1".to_string(),
        1 => "ϱ".to_string(),
        _ => format!("ϱ^{k}"),
    };
    Ok(MixedClassTable {
        operator,
        word,
        classes,
    })
}

/// `|U₁ diag(ϖ^a, ϖ^b) U₁ / U₁|` for a rank-one factor with residue degree one.
fn rank_one_count(a: i64, b: i64) -> HalfPowerLaurent {
    let n = (a - b).abs();
    if n == 0 {
        HalfPowerLaurent::one()
    } else {
        HalfPowerLaurent::q_pow(n - 1) * HalfPowerLaurent::from_q_coeffs(&[1, 1])
    }
}

/// `|Uϖ^λU / U|` for the block subgroup `H` of the rank-three presets, whose factors
/// carry the cocharacters `diag(ϖ^{a₁}, ϖ^{a₀−a₁})` and `diag(ϖ^{a₂}, ϖ^{a₀−a₂})`.
pub fn block_cartan_count(lambda: &[i64]) -> HalfPowerLaurent {
    let (a0, a1, a2) = (lambda[0], lambda[1], lambda[2]);
    rank_one_count(a1, a0 - a1) * rank_one_count(a2, a0 - a2)
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// A class list `(λ, τ index)` for a base operator, shifted by a central cocharacter.
///
/// Only the `τ₀` classes get a symbolic degree: there `H ∩ ϖ^λKϖ^{−λ} = ϖ^λUϖ^{−λ}` and the
/// degree is the block Cartan count. The other degrees are left open.
fn build_table(
    operator: Vec<i64>,
    word: &str,
    base: &[(Vec<i64>, usize)],
    shift: &[i64],
    layers: &dyn Fn(usize) -> LayerIndex,
) -> Result<MixedClassTable, DecomposeError> {
    let classes: Vec<MixedClass> = base
        .iter()
        .map(|(l, t)| MixedClass {
            lambda: add(l, shift),
            tau_index: *t,
            degree: (*t == 0).then(|| block_cartan_count(&add(l, shift))),
            layer: layers(*t),
        })
        .collect();
    Ok(MixedClassTable {
        operator,
        word: word.to_string(),
        classes,
    })
}

/// The mixed class tables of every operator in the Hecke polynomial of a preset.
///
/// GSp4 (`H = GL₂ ×_det GL₂`): `R(ρ) = {ϖ^{(1,1,1)}, τ₁}`,
/// `R(w₀ρ²) = {ϖ^{(2,2,1)}, ϖ^{(2,1,2)}, ϖ^{(1,1,0)}τ₁}` and central translates.
/// GU4 (`H = GU₂ ×_μ GU₂`): `R(w₀ρ²) = {ϖ^{(2,2,1)}, ϖ^{(2,1,2)}, ϖ^{(1,1,0)}τ₁, τ₃}`,
/// `R(w₀w₁w₀ρ⁴) = {ϖ^{(4,3,3)}, ϖ^{(3,2,2)}τ₁, ϖ^{(2,1,1)}τ₂}` and central translates.
/// `GL_n` presets with even `n` use [`gln_mixed_table`].
pub fn case_mixed_tables(preset: Preset) -> Result<Vec<MixedClassTable>, DecomposeError> {
    let zero = vec![0i64, 0, 0];
    match preset {
        Preset::Gsp4 => {
            let layers = |_t: usize| LayerIndex::QMinusOne;
            let rho = vec![(vec![1, 1, 1], 0), (vec![0, 0, 0], 1)];
            let w0rho2 = vec![(vec![2, 2, 1], 0), (vec![2, 1, 2], 0), (vec![1, 1, 0], 1)];
            let id = vec![(zero.clone(), 0)];
            let z = vec![2i64, 1, 1];
            Ok(vec![
                build_table(zero.clone(), "1", &id, &zero, &layers)?,
                build_table(vec![1, 1, 1], "ρ", &rho, &zero, &layers)?,
                build_table(vec![2, 2, 1], "w0ρ^2", &w0rho2, &zero, &layers)?,
                build_table(vec![2, 1, 1], "ρ^2", &id, &z, &layers)?,
                build_table(vec![3, 2, 2], "ρ^3", &rho, &z, &layers)?,
                build_table(vec![4, 2, 2], "ρ^4", &id, &[4, 2, 2], &layers)?,
            ])
        }
        Preset::Gu4 => {
            let layers = |t: usize| {
                if t == 0 || t == 3 {
                    LayerIndex::QPlusOne
                } else {
                    LayerIndex::One
                }
            };
            let id = vec![(zero.clone(), 0)];
            let w0rho2 = vec![
                (vec![2, 2, 1], 0),
                (vec![2, 1, 2], 0),
                (vec![1, 1, 0], 1),
                (zero.clone(), 3),
            ];
            let w0w1w0rho4 = vec![(vec![4, 3, 3], 0), (vec![3, 2, 2], 1), (vec![2, 1, 1], 2)];
            let z = |k: i64| vec![2 * k, k, k];
            Ok(vec![
                build_table(zero.clone(), "1", &id, &zero, &layers)?,
                build_table(vec![2, 2, 1], "w0ρ^2", &w0rho2, &zero, &layers)?,
                build_table(vec![2, 1, 1], "ρ^2", &id, &z(1), &layers)?,
                build_table(vec![4, 3, 3], "w0w1w0ρ^4", &w0w1w0rho4, &zero, &layers)?,
                build_table(vec![4, 3, 2], "w0ρ^4", &w0rho2, &z(1), &layers)?,
                build_table(vec![4, 2, 2], "ρ^4", &id, &z(2), &layers)?,
                build_table(vec![6, 4, 3], "w0ρ^6", &w0rho2, &z(2), &layers)?,
                build_table(vec![6, 3, 3], "ρ^6", &id, &z(3), &layers)?,
                build_table(vec![8, 4, 4], "ρ^8", &id, &z(4), &layers)?,
            ])
        }
        Preset::Gln(n) if n % 2 == 0 => (0..=n).map(|k| gln_mixed_table(n / 2, k)).collect(),
        other => Err(DecomposeError::NoTable(other.to_string())),
    }
}
