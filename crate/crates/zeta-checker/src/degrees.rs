//! Degrees of the twisted restrictions `𝔥_α` of `𝓗̃_c` and the layer indices `d_α`.

use std::collections::BTreeMap;

use coset_decomposer::{case_mixed_tables, gln_mixed_table, LayerIndex, MixedClassTable};
use exact_algebra::HalfPowerLaurent;
use root_datum::Preset;
use serde_json::{json, Value};

use crate::error::ZetaError;
use crate::tilde::{tilde_hecke, TildeHecke};

/// Which layer extension the verdict is taken against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LayerChoice {
    /// The anticyclotomic layer of the similitude torus.
    Standard,
    /// The layer cut out by the product of the two block determinants; every
    /// `GL_{2m}` class then has index `q − 1`, including `τ_m`.
    ProductDeterminant,
}

/// `deg(𝔥^t_α)`: a known part plus coefficients of mixed degrees not known symbolically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassDegree {
    /// `g_{i,k₂}` for `GL_{2m}`, `g_i` for GU4.
    pub label: String,
    /// The index `i` of `τ_i`.
    pub tau: usize,
    /// `k₂` for `GL_{2m}`.
    pub k2: Option<usize>,
    /// The sum of `c_j · deg [Uσ_jK]_*` over classes of known degree.
    pub degree: HalfPowerLaurent,
    /// `(symbol, total coefficient)` for each mixed degree left symbolic.
    pub unknowns: Vec<(String, HalfPowerLaurent)>,
    /// The layer index `d_α`.
    pub layer: LayerIndex,
}

impl ClassDegree {
    /// JSON rendering.
    pub fn to_json(&self) -> Value {
        json!({
            "class": self.label,
            "degree": self.degree.to_string(),
            "unknowns": self.unknowns.iter().map(|(s, c)| json!({"symbol": s, "coeff": c.to_string()})).collect::<Vec<_>>(),
            "dAlpha": self.layer.as_laurent().to_string(),
        })
    }
}

fn gln_layer(m: usize, i: usize, choice: LayerChoice) -> LayerIndex {
    match choice {
        LayerChoice::ProductDeterminant => LayerIndex::QMinusOne,
        LayerChoice::Standard if i < m => LayerIndex::QMinusOne,
        LayerChoice::Standard => LayerIndex::One,
    }
}

/// The layer indices `d_α` per class label, in class order.
///
/// `G_m × GL_{2m}`: `d_i = q − 1` for `i < m` and `d_m = 1` (all `q − 1` for the
/// product-of-determinants layer). GU4: `d₀ = d₃ = q + 1`, `d₁ = d₂ = 1`.
pub fn layer_indices(preset: Preset, choice: LayerChoice) -> Result<Vec<(String, LayerIndex)>, ZetaError> {
    match (preset, choice) {
        (Preset::Gln(n), _) if n % 2 == 0 && n > 0 => {
            let m = n / 2;
            Ok((0..=m).map(|i| (format!("τ_{i}"), gln_layer(m, i, choice))).collect())
        }
        (Preset::Gu4, LayerChoice::Standard) => {
            let tables = case_mixed_tables(preset)?;
            let mut seen: BTreeMap<usize, LayerIndex> = BTreeMap::new();
            for c in tables.iter().flat_map(|t| &t.classes) {
                seen.insert(c.tau_index, c.layer);
            }
            Ok(seen.into_iter().map(|(i, d)| (format!("τ_{i}"), d)).collect())
        }
        _ => Err(ZetaError::Unsupported(preset.name())),
    }
}

fn table_for<'a>(tables: &'a [MixedClassTable], lambda: &[i64]) -> Result<&'a MixedClassTable, ZetaError> {
    tables
        .iter()
        .find(|t| t.operator == lambda)
        .ok_or_else(|| ZetaError::Unsupported(format!("no mixed table for operator {lambda:?}")))
}

/// Reduces a GU4 cocharacter modulo the central `(2,1,1)` so that `a₀ ∈ {0, 1}`.
fn central_reduce(lambda: &[i64]) -> Vec<i64> {
    let k = lambda[0].div_euclid(2);
    vec![lambda[0] - 2 * k, lambda[1] - k, lambda[2] - k]
}

/// `deg(𝔥^t_α) = Σ_j c_j · deg [Uσ_jK]_*` for every class `α`.
///
/// For `G_m × GL_{2m}` the classes are `g_{i,k₂}` (`0 ≤ k₂ ≤ m`, `0 ≤ i ≤ m − k₂`) and the
/// term `X^k` contributes through the classes `ϖ^{λ_κ}τ_i` with `κ = (k − k₂, k₂)`.
/// For GU4 the classes are `g_i = Hτ_iK`; the central translates of a class land in the
/// same `g_i`, and a mixed degree without symbolic value enters as a named unknown.
pub fn class_degrees(preset: Preset, c: i64, choice: LayerChoice) -> Result<Vec<ClassDegree>, ZetaError> {
    let tilde = tilde_hecke(preset, c)?;
    class_degrees_of(&tilde, choice)
}

/// As [`class_degrees`], for an already assembled `𝓗̃_c`.
pub fn class_degrees_of(tilde: &TildeHecke, choice: LayerChoice) -> Result<Vec<ClassDegree>, ZetaError> {
    match tilde.preset {
        Preset::Gln(n) if n % 2 == 0 => gln_class_degrees(tilde, n / 2, choice),
        Preset::Gu4 if choice == LayerChoice::Standard => gu4_class_degrees(tilde),
        other => Err(ZetaError::Unsupported(other.name())),
    }
}

fn gln_class_degrees(tilde: &TildeHecke, m: usize, choice: LayerChoice) -> Result<Vec<ClassDegree>, ZetaError> {
    let mut acc: BTreeMap<(usize, usize), HalfPowerLaurent> = BTreeMap::new();
    for k2 in 0..=m {
        for i in 0..=(m - k2) {
            acc.insert((k2, i), HalfPowerLaurent::zero());
        }
    }
    for term in &tilde.terms {
        let table = gln_mixed_table(m, term.x_degree)?;
        if table.operator != term.lambda {
            return Err(ZetaError::Unsupported(format!("unexpected operator {:?}", term.lambda)));
        }
        for class in &table.classes {
            let k1 = class.lambda[1..=m].iter().sum::<i64>() as usize;
            let k2 = term.x_degree - k1;
            let degree = class.degree.as_ref().expect("GL mixed degrees are symbolic");
            *acc.get_mut(&(k2, class.tau_index)).expect("class in range") += &(&term.coeff * degree);
        }
    }
    Ok(acc
        .into_iter()
        .map(|((k2, i), degree)| ClassDegree {
            label: format!("g_{{{i},{k2}}}"),
            tau: i,
            k2: Some(k2),
            degree,
            unknowns: Vec::new(),
            layer: gln_layer(m, i, choice),
        })
        .collect())
}

fn gu4_class_degrees(tilde: &TildeHecke) -> Result<Vec<ClassDegree>, ZetaError> {
    let tables = case_mixed_tables(Preset::Gu4)?;
    let mut out: BTreeMap<usize, (HalfPowerLaurent, BTreeMap<String, HalfPowerLaurent>, LayerIndex)> = BTreeMap::new();
    for term in &tilde.terms {
        for class in &table_for(&tables, &term.lambda)?.classes {
            let entry = out
                .entry(class.tau_index)
                .or_insert_with(|| (HalfPowerLaurent::zero(), BTreeMap::new(), class.layer));
            match &class.degree {
                Some(d) => entry.0 += &(&term.coeff * d),
                None => {
                    let r = central_reduce(&class.lambda);
                    let symbol = format!("deg[Uϖ^({},{},{})τ{}K]", r[0], r[1], r[2], class.tau_index);
                    *entry.1.entry(symbol).or_insert_with(HalfPowerLaurent::zero) += &term.coeff;
                }
            }
        }
    }
    Ok(out
        .into_iter()
        .map(|(i, (degree, unknowns, layer))| ClassDegree {
            label: format!("g_{i}"),
            tau: i,
            k2: None,
            degree,
            unknowns: unknowns.into_iter().collect(),
            layer,
        })
        .collect())
}
