//! The GSp4 zeta verdict at a concrete prime.
//!
//! The twisted spin Hecke polynomial is built symbolically, its coefficients are checked to
//! lie in `Z[q^{±1}]` (this fails for even `c`) and reduced mod `q − 1`. Each remaining
//! operator `Kϖ^λK` is restricted to `H = GL₂ ×_{det} GL₂` through its mixed-class table:
//! the `τ₀` classes give `𝔥₀ = Σ r_λ·[Uϖ^μU]_*` and the `τ₁` classes give
//! `𝔥₁ = Σ r_λ·(Uϖ^μH_{τ₁})_*`. The verdict requires
//!
//! 1. `𝔥₀,*(φ) ≡ 0` pointwise mod `p − 1`;
//! 2. `𝔥₁,*(φ) ≡ ±ψ` mod `p − 1`, with `𝔥′₁,*(φ) = ψ` exactly;
//! 3. `ψ` passes the trace criterion for `H_{τ₁}` and its level subgroup, at level `N`
//!    and again at `N + 1`.

use std::collections::BTreeMap;

use coset_decomposer::case_mixed_tables;
use num_traits::ToPrimitive;
use root_datum::Preset;
use serde_json::{json, Value};
use zeta_checker::tilde_hecke;

use crate::action::h_tau1_action;
use crate::error::SchwartzError;
use crate::hecke::{frakh1, hecke_act, j_pushforward, psi};
use crate::space::{FiniteSchwartz, Level};
use crate::trace::{support_stabilizer_indices, trace_check};

/// The outcome of [`gsp4_zeta_verdict`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gsp4Verdict {
    /// The twist.
    pub c: i64,
    /// The prime.
    pub p: u32,
    /// Whether every coefficient lies in `Z[q^{±1}]`.
    pub parity_ok: bool,
    /// Operators whose coefficient has a half-integral power of `q`.
    pub parity_failures: Vec<Vec<i64>>,
    /// The polynomial at `X = Frob`, reduced mod `q − 1`: operator `λ` and integer coefficient.
    pub reduced: Vec<(Vec<i64>, i64)>,
    /// `𝔥₀,*(φ) ≡ 0 mod p − 1`.
    pub h0_vanishes: Option<bool>,
    /// `𝔥₁,*(φ) ≡ ±ψ mod p − 1`.
    pub h1_matches_psi: Option<bool>,
    /// `𝔥′₁,*(φ) = ψ` exactly.
    pub frakh1_is_psi: Option<bool>,
    /// The largest `[V_x : V]` over the support of `ψ`.
    pub max_stabilizer_index: Option<u64>,
    /// The trace criterion for `ψ`, at levels `N` and `N + 1`.
    pub trace_ok: Option<bool>,
    /// The finite models used for `𝔥₀` and for `𝔥₁`.
    pub levels: Vec<(u32, u32)>,
    /// Whether every check passed.
    pub pass: bool,
}

impl Gsp4Verdict {
    /// JSON rendering.
    pub fn to_json(&self) -> Value {
        json!({
            "preset": "gsp4",
            "c": self.c,
            "p": self.p,
            "parityOk": self.parity_ok,
            "parityFailures": self.parity_failures,
            "reduced": self.reduced.iter().map(|(l, r)| json!({"lambda": l, "coeff": r})).collect::<Vec<_>>(),
            "h0Vanishes": self.h0_vanishes,
            "h1MatchesPsi": self.h1_matches_psi,
            "frakh1IsPsi": self.frakh1_is_psi,
            "maxStabilizerIndex": self.max_stabilizer_index,
            "traceOk": self.trace_ok,
            "levels": self.levels.iter().map(|(m, n)| json!({"M": m, "N": n})).collect::<Vec<_>>(),
            "pass": self.pass,
        })
    }
}

/// `𝔥₀,*(φ)` and `𝔥₁,*(φ)` from the reduced polynomial and the mixed tables.
pub fn restricted_operators(
    reduced: &[(Vec<i64>, i64)],
    level0: Level,
    level1: Level,
) -> Result<(FiniteSchwartz, FiniteSchwartz), SchwartzError> {
    let tables = case_mixed_tables(Preset::Gsp4).map_err(padic_models::PadicError::from)?;
    let phi0 = FiniteSchwartz::box_fn(level0, [0; 4])?;
    let phi1 = FiniteSchwartz::box_fn(level1, [0; 4])?;
    let mut h0 = FiniteSchwartz::zero(level0);
    let mut h1 = FiniteSchwartz::zero(level1);
    for (op, r) in reduced {
        let table = tables
            .iter()
            .find(|t| &t.operator == op)
            .ok_or_else(|| SchwartzError::Unsupported(format!("no mixed table for operator {op:?}")))?;
        for class in &table.classes {
            let mu = &class.lambda;
            match class.tau_index {
                0 => h0 = h0.add_scaled(&hecke_act(mu, &phi0)?, *r)?,
                1 => {
                    if mu[2] != mu[0] - mu[1] {
                        return Err(SchwartzError::Unsupported(format!(
                            "class {mu:?} is not ȷ of a torus element"
                        )));
                    }
                    h1 = h1.add_scaled(&j_pushforward([mu[1], mu[0] - mu[1]], &phi1)?, *r)?;
                }
                t => return Err(SchwartzError::Unsupported(format!("τ_{t} does not occur for GSp4"))),
            }
        }
    }
    Ok((h0, h1))
}

/// Runs the GSp4 zeta verdict for the twist `c` at the prime `p`.
pub fn gsp4_zeta_verdict(c: i64, p: u32) -> Result<Gsp4Verdict, SchwartzError> {
    let poly = tilde_hecke(Preset::Gsp4, c)?;
    let parity_failures: Vec<Vec<i64>> = poly
        .terms
        .iter()
        .filter(|t| !t.coeff.is_integral_power())
        .map(|t| t.lambda.clone())
        .collect();
    let mut verdict = Gsp4Verdict {
        c,
        p,
        parity_ok: parity_failures.is_empty(),
        parity_failures,
        reduced: Vec::new(),
        h0_vanishes: None,
        h1_matches_psi: None,
        frakh1_is_psi: None,
        max_stabilizer_index: None,
        trace_ok: None,
        levels: Vec::new(),
        pass: false,
    };
    if !verdict.parity_ok {
        return Ok(verdict);
    }
    let mut reduced: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for t in &poly.terms {
        let r = t
            .coeff
            .residue_at(1)
            .map_err(|e| SchwartzError::Unsupported(e.to_string()))?
            .to_i64()
            .ok_or_else(|| SchwartzError::Unsupported("coefficient overflow".into()))?;
        *reduced.entry(t.lambda.clone()).or_insert(0) += r;
    }
    verdict.reduced = reduced.into_iter().filter(|(_, r)| *r != 0).collect();

    let modulus = p as i64 - 1;
    let level0 = Level::default_for(p, 2)?;
    let level1 = Level::default_for(p, 1)?;
    verdict.levels = vec![(level0.lower(), level0.upper()), (level1.lower(), level1.upper())];
    let (h0, h1) = restricted_operators(&verdict.reduced, level0, level1)?;
    verdict.h0_vanishes = Some(h0.divisible_by(modulus));

    let psi_fn = psi(level1)?;
    let phi = FiniteSchwartz::box_fn(level1, [0; 4])?;
    verdict.frakh1_is_psi = Some(frakh1(&phi)? == psi_fn);
    let matches = |eps: i64| h1.add_scaled(&psi_fn, -eps).map(|d| d.divisible_by(modulus));
    verdict.h1_matches_psi = Some(matches(1)? || matches(-1)?);

    let w = h_tau1_action(level1)?;
    let indices = support_stabilizer_indices(psi_fn.values(), &w)?;
    verdict.max_stabilizer_index = indices.iter().copied().max();
    let here = trace_check(psi_fn.values(), &w)?;
    let finer = level1.refine()?;
    let there = trace_check(psi(finer)?.values(), &h_tau1_action(finer)?)?;
    if here != there {
        return Err(SchwartzError::LevelTooLow {
            level: level1.upper(),
            at_level: here as u64,
            at_next: there as u64,
        });
    }
    verdict.trace_ok = Some(here);
    verdict.pass = verdict.h0_vanishes == Some(true)
        && verdict.h1_matches_psi == Some(true)
        && verdict.frakh1_is_psi == Some(true)
        && verdict.trace_ok == Some(true);
    Ok(verdict)
}
