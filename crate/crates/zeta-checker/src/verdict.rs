//! The verdict `deg(𝔥^t_α) ∈ d_α·𝒪` for every class `α`.
//!
//! Membership in `(q ∓ 1)·𝒪` is tested as vanishing of the residue at `q = ±1`, using
//! `Z[q^{±1/2}] / (q^{1/2} ∓ 1) ≅ Z`; a class with `d_α = 1` passes outright.

use coset_decomposer::LayerIndex;
use exact_algebra::{BigInt, HalfPowerLaurent};
use root_datum::Preset;
use serde_json::{json, Value};

use crate::degrees::{class_degrees, ClassDegree, LayerChoice};
use crate::error::ZetaError;

/// The outcome for one class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassVerdict {
    /// The class and its degree.
    pub class: ClassDegree,
    /// Residue of the known degree at the test point of `d_α` (none when `d_α = 1`).
    pub residue: Option<BigInt>,
    /// Residues of the coefficients of the symbolic unknowns.
    pub unknown_residues: Vec<(String, BigInt)>,
    /// Whether `deg(𝔥^t_α) ∈ d_α·𝒪`.
    pub pass: bool,
}

/// Per-class verdicts and their conjunction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaVerdict {
    /// The preset.
    pub preset: Preset,
    /// The twist `c`.
    pub c: i64,
    /// One entry per class.
    pub classes: Vec<ClassVerdict>,
    /// `true` iff every class passes.
    pub overall: bool,
}

impl ZetaVerdict {
    /// JSON rendering: `{class, degree, residue, dAlpha, pass}` per class and the overall verdict.
    pub fn to_json(&self) -> Value {
        json!({
            "preset": self.preset.name(),
            "c": self.c,
            "classes": self.classes.iter().map(|v| {
                let mut o = v.class.to_json();
                o["residue"] = json!(v.residue.as_ref().map(|r| r.to_string()));
                o["unknownResidues"] = json!(v.unknown_residues.iter()
                    .map(|(s, r)| json!({"symbol": s, "residue": r.to_string()})).collect::<Vec<_>>());
                o["pass"] = json!(v.pass);
                o
            }).collect::<Vec<_>>(),
            "overall": self.overall,
        })
    }
}

fn check_parity(label: &str, x: &HalfPowerLaurent) -> Result<(), ZetaError> {
    match x.terms().find(|(h, _)| h % 2 != 0) {
        Some((half, _)) => Err(ZetaError::OddHalfPower {
            class: label.to_string(),
            half,
        }),
        None => Ok(()),
    }
}

/// Decides one class.
pub fn judge(class: ClassDegree) -> Result<ClassVerdict, ZetaError> {
    let Some(eps) = class.layer.test_point() else {
        return Ok(ClassVerdict {
            class,
            residue: None,
            unknown_residues: Vec::new(),
            pass: true,
        });
    };
    check_parity(&class.label, &class.degree)?;
    for (_, c) in &class.unknowns {
        check_parity(&class.label, c)?;
    }
    let residue = class.degree.residue_at(eps)?;
    let unknown_residues = class
        .unknowns
        .iter()
        .map(|(s, c)| Ok((s.clone(), c.residue_at(eps)?)))
        .collect::<Result<Vec<_>, ZetaError>>()?;
    let zero = BigInt::from(0);
    let pass = residue == zero && unknown_residues.iter().all(|(_, r)| *r == zero);
    Ok(ClassVerdict {
        class,
        residue: Some(residue),
        unknown_residues,
        pass,
    })
}

/// The zeta-element verdict for the trivial source functor.
///
/// Fails with [`ZetaError::OddHalfPower`] when a degree tested modulo `q ∓ 1` contains an
/// odd power of `q^{1/2}`, which happens exactly when `c` has the wrong parity.
pub fn zeta_verdict(preset: Preset, c: i64, choice: LayerChoice) -> Result<ZetaVerdict, ZetaError> {
    let classes = class_degrees(preset, c, choice)?
        .into_iter()
        .map(judge)
        .collect::<Result<Vec<_>, _>>()?;
    let overall = classes.iter().all(|v| v.pass);
    Ok(ZetaVerdict {
        preset,
        c,
        classes,
        overall,
    })
}

/// Evaluates the layer index at a concrete prime, for cross-checks against index computations.
pub fn layer_at_prime(layer: LayerIndex, p: i64) -> i64 {
    layer.at_prime(p)
}
