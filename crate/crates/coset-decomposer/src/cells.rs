//! Decomposition of `K_X w K_Y / K_Y` into Bruhat cells.
//!
//! For `w` minimal in `W_X w W_Y`, the left cosets are the disjoint union over
//! `τ ∈ [W_X / (W_X ∩ wW_Yw⁻¹)]` of the cells of `τw`, each containing
//! `q^{Σ d(s)}` cosets where `s` runs over the letters of a reduced word of `τw`.

use std::collections::HashSet;

use exact_algebra::HalfPowerLaurent;
use root_datum::Preset;
use serde_json::{json, Value};
use weyl_engine::{AffineWeyl, AffineWord, ExtAffineElement};

use crate::error::DecomposeError;

/// One Bruhat cell `im 𝒳_{τw}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetCell {
    /// Reduced word of `τw`.
    pub word: AffineWord,
    /// `Σ d(s)` over the letters of `word`; the cell has `q^{size_exp}` cosets.
    pub size_exp: u32,
    /// Reduced word of the representative `τ`.
    pub tau: Vec<usize>,
}

/// All cells of a double coset together with the total coset count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BnDecomposition {
    /// Cells ordered by `(size_exp, τ word)`.
    pub cells: Vec<CosetCell>,
    /// `Σ q^{size_exp}`.
    pub total: HalfPowerLaurent,
}

impl BnDecomposition {
    /// JSON rendering: the cells as `{word, sizeExp, tau}` and the total.
    pub fn to_json(&self) -> Value {
        json!({
            "cells": self.cells.iter().map(|c| json!({
                "word": c.word.to_string(),
                "sizeExp": c.size_exp,
                "tau": c.tau,
            })).collect::<Vec<_>>(),
            "total": self.total.to_string(),
        })
    }
}

fn size_exp(aw: &AffineWeyl, letters: &[usize]) -> u32 {
    letters.iter().map(|&s| aw.param_exp(s)).sum()
}

/// Cells of `K_X w K_Y / K_Y` for parahorics indexed by label sets `X`, `Y`.
pub fn bn_cells(
    aw: &AffineWeyl,
    x: &[usize],
    y: &[usize],
    w: &ExtAffineElement,
) -> Result<BnDecomposition, DecomposeError> {
    let wx = aw.generated_subgroup(x)?;
    let wy = aw.generated_subgroup(y)?;
    // `w` is minimal in `W_X w W_Y` iff no simple reflection of `X` (left) or `Y` (right)
    // shortens it.
    let len_w = aw.length(w);
    for &s in x {
        let l = aw.length(&aw.generator(s)?.mul(w));
        if l < len_w {
            return Err(DecomposeError::NotReduced(len_w, l));
        }
    }
    for &s in y {
        let l = aw.length(&w.mul(aw.generator(s)?));
        if l < len_w {
            return Err(DecomposeError::NotReduced(len_w, l));
        }
    }
    // Right cosets wW_Y as sets, to group W_X by the coset τwW_Y it lands in.
    let wy_set: HashSet<ExtAffineElement> = wy.iter().cloned().collect();
    let w_inv = w.inverse();
    let mut reps: Vec<(usize, ExtAffineElement)> = Vec::new();
    for tau in &wx {
        // τ and τ' give the same coset iff w⁻¹τ⁻¹τ'w ∈ W_Y.
        let tw = tau.mul(w);
        match reps.iter_mut().find(|(_, r)| {
            let rel = w_inv.mul(&r.inverse()).mul(tau).mul(w);
            wy_set.contains(&rel)
        }) {
            Some(slot) => {
                let l = aw.length(&tw);
                let cur = aw.length(&slot.1.mul(w));
                if l < cur {
                    *slot = (l, tau.clone());
                }
            }
            None => reps.push((aw.length(&tw), tau.clone())),
        }
    }
    let mut cells: Vec<CosetCell> = reps
        .into_iter()
        .map(|(_, tau)| {
            let word = aw.reduced_word(&tau.mul(w));
            CosetCell {
                size_exp: size_exp(aw, &word.letters),
                tau: aw.reduced_word(&tau).letters,
                word,
            }
        })
        .collect();
    cells.sort_by(|a, b| (a.size_exp, &a.tau).cmp(&(b.size_exp, &b.tau)));
    let total = cells.iter().fold(HalfPowerLaurent::zero(), |acc, c| {
        acc + HalfPowerLaurent::q_pow(c.size_exp as i64)
    });
    Ok(BnDecomposition { cells, total })
}

/// Cells of `Kϖ^λK / K` for a preset: `X = Y` are the finite simple reflections and
/// `w` is the minimal representative of the double coset.
pub fn spherical_cells(preset: Preset, lambda: &[i64]) -> Result<BnDecomposition, DecomposeError> {
    let aw = AffineWeyl::for_preset(preset);
    let finite: Vec<usize> = (1..aw.num_generators()).collect();
    let w = aw.min_rep_double(lambda)?;
    bn_cells(&aw, &finite, &finite, &w)
}
