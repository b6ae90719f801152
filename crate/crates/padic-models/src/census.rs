//! Counts derived from enumerations: cosets by Iwasawa shape, and convolution
//! structure constants `c^υ_{σ,τ} = #{(i, j) : α_i β_j K = ϖ^υ K}` where
//! `KσK = ⊔ α_iK` and `KτK = ⊔ β_jK`.

use std::collections::BTreeMap;

use crate::enumerate::enumerate_cells;
use crate::error::PadicError;
use crate::model::ModelPreset;

/// Number of cosets of `Kϖ^λK / K` of each Iwasawa shape.
pub fn shape_census(model: &ModelPreset, lambda: &[i64]) -> Result<BTreeMap<Vec<i64>, u64>, PadicError> {
    let e = enumerate_cells(model, lambda)?;
    let mut out = BTreeMap::new();
    for c in &e.cosets {
        *out.entry(model.iwasawa_shape(&c.matrix)?).or_insert(0) += 1;
    }
    Ok(out)
}

/// Structure constants of `(KσK) * (KτK) = Σ_υ c^υ (Kϖ^υK)`, keyed by dominant `υ`.
pub fn convolution_counts(
    model: &ModelPreset,
    sigma: &[i64],
    tau: &[i64],
) -> Result<BTreeMap<Vec<i64>, u64>, PadicError> {
    let a = enumerate_cells(model, sigma)?;
    let b = enumerate_cells(model, tau)?;
    let mut out: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    let mut targets = BTreeMap::new();
    for x in &a.cosets {
        for y in &b.cosets {
            let prod = x.matrix.mul(&y.matrix);
            let upsilon = model.cartan_type(&prod)?;
            let target = match targets.get(&upsilon) {
                Some(k) => k,
                None => {
                    let k = model.coset_key(&model.torus(&upsilon)?)?;
                    targets.entry(upsilon.clone()).or_insert(k)
                }
            };
            let hit = model.coset_key(&prod)? == *target;
            let slot = out.entry(upsilon).or_insert(0);
            if hit {
                *slot += 1;
            }
        }
    }
    Ok(out)
}
