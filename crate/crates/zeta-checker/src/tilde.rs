//! The twisted Hecke polynomial `𝓗̃_c = ℌ_c(Frob)` as a list of operator terms.

use exact_algebra::HalfPowerLaurent;
use root_datum::Preset;
use satake::{hecke_polynomial, minuscule_satake_poly, required_budget, satake_poly_from_monomials, TransformTable};
use serde_json::{json, Value};

use crate::error::ZetaError;

/// One term `coeff · (Kϖ^λK) · Frob^{frob_exp}` coming from the `X^{x_degree}` coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TildeTerm {
    /// The scalar coefficient.
    pub coeff: HalfPowerLaurent,
    /// The dominant cocharacter of the operator.
    pub lambda: Vec<i64>,
    /// The exponent of the Frobenius in the torus factor.
    pub frob_exp: i64,
    /// The power of `X` the term comes from.
    pub x_degree: usize,
}

/// `ℌ_c(X)` with `X` replaced by the Frobenius.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TildeHecke {
    /// The preset.
    pub preset: Preset,
    /// The twist `c`.
    pub c: i64,
    /// The terms, in increasing `X`-degree and then lexicographic `λ`.
    pub terms: Vec<TildeTerm>,
}

impl TildeHecke {
    /// JSON rendering.
    pub fn to_json(&self) -> Value {
        json!({
            "preset": self.preset.name(),
            "c": self.c,
            "terms": self.terms.iter().map(|t| json!({
                "coeff": t.coeff.to_string(),
                "lambda": t.lambda,
                "frobExp": t.frob_exp,
                "xDegree": t.x_degree,
            })).collect::<Vec<_>>(),
        })
    }

    /// The terms coming from `X^k`.
    pub fn terms_of_degree(&self, k: usize) -> impl Iterator<Item = &TildeTerm> {
        self.terms.iter().filter(move |t| t.x_degree == k)
    }
}

/// Builds `ℌ_c` from the Satake polynomial of the preset by Satake inversion and
/// substitutes the Frobenius for `X`.
///
/// * `G_m × GL_n`: the standard representation, `s = c/2`; the Frobenius lives in the
///   torus factor, so the `X^k` term carries `Frob^k`.
/// * GSp4: the spin representation, `s = c/2`.
/// * GU4: the base-changed standard representation, `s = c`.
///
/// For GSp4 and GU4 the Frobenius is the characteristic function of the maximal compact
/// of the torus factor, so its exponent is recorded as zero.
pub fn tilde_hecke(preset: Preset, c: i64) -> Result<TildeHecke, ZetaError> {
    let datum = preset.datum();
    let (satake, s_twice, twisted) = match preset {
        Preset::Gln(n) => {
            let mut mu = vec![0i64; n + 1];
            mu[0] = 1;
            mu[1] = 1;
            (minuscule_satake_poly(&datum, &mu)?, c, true)
        }
        Preset::Gsp4 => (minuscule_satake_poly(&datum, &[1, 1, 1])?, c, false),
        Preset::Gu4 => {
            let monomials = [vec![2, 2, 1], vec![2, 0, 1], vec![2, 1, 2], vec![2, 1, 0]];
            (satake_poly_from_monomials(3, &monomials), 2 * c, false)
        }
        Preset::Gl2 => return Err(ZetaError::Unsupported(preset.name())),
    };
    let table = TransformTable::build(preset, &required_budget(&datum, &satake))?;
    let hecke = hecke_polynomial(&satake, s_twice, &table)?;
    let mut terms = Vec::new();
    for (k, comb) in hecke.coeffs().iter().enumerate() {
        for (lambda, coeff) in comb.terms() {
            terms.push(TildeTerm {
                coeff: coeff.clone(),
                lambda: lambda.clone(),
                frob_exp: if twisted { k as i64 } else { 0 },
                x_degree: k,
            });
        }
    }
    Ok(TildeHecke { preset, c, terms })
}
