//! Layer indices `[ν(H_g) : ν(H_g) ∩ D]` computed from the stabilizer of `gK` in `U`.
//!
//! The orbit `U·gK` is explored breadth-first while recording `ν` of a transversal;
//! Schreier's lemma turns each edge into a generator `ν(s)ν(t_x)ν(t_{sx})⁻¹` of
//! `ν(U ∩ gKg⁻¹)`. For the matrices `τ_i` of the case studies `H ∩ τKτ⁻¹ ⊂ U`, so
//! this is `ν(H_g)`. Since `D` is the kernel of reduction modulo `ϖ` on `C`, the index
//! is the order of the subgroup generated by the reductions in the residue field.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::PadicError;
use crate::matrix::LocalMatrix;
use crate::model::ModelPreset;
use crate::orbits::act;
use crate::residue::Res;

/// The layer against which the index is taken.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexLayer {
    /// The whole compact group `C` (index always one).
    Full,
    /// The layer `D` (kernel of reduction modulo `ϖ`).
    D,
}

/// Result of an index computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexResult {
    /// The index.
    pub index: u64,
    /// `|U·gK / K|`.
    pub orbit_size: usize,
    /// Level used.
    pub level: u32,
}

fn subgroup_order(model: &ModelPreset, gens: &HashSet<Res>) -> u64 {
    let r = model.ring();
    let one = r.reduce_mod(r.one(), 1);
    let mut seen: HashSet<Res> = HashSet::from([one]);
    let mut queue = vec![one];
    while let Some(x) = queue.pop() {
        for &g in gens {
            let y = r.reduce_mod(r.mul(x, g), 1);
            if seen.insert(y) {
                queue.push(y);
            }
        }
    }
    seen.len() as u64
}

fn index_at(model: &ModelPreset, g: &LocalMatrix, level: u32) -> Result<IndexResult, PadicError> {
    let r = model.ring();
    let gens = model.u_generators(level)?;
    let start = model.coset_key(g)?;
    let mut nu_of: HashMap<_, Res> = HashMap::from([(start.clone(), r.one())]);
    let mut queue = VecDeque::from([start]);
    let mut schreier: HashSet<Res> = HashSet::new();
    while let Some(x) = queue.pop_front() {
        let nx = nu_of[&x];
        for u in &gens {
            let y = act(model, u, &x)?;
            let candidate = r.reduce_mod(r.mul(u.nu, nx), 1);
            match nu_of.get(&y) {
                Some(&ny) => {
                    let s = r.reduce_mod(r.mul(candidate, r.inv(ny)), 1);
                    schreier.insert(s);
                }
                None => {
                    nu_of.insert(y.clone(), candidate);
                    queue.push_back(y);
                }
            }
        }
    }
    Ok(IndexResult {
        index: subgroup_order(model, &schreier),
        orbit_size: nu_of.len(),
        level,
    })
}

/// `[ν(H_g) : ν(H_g) ∩ layer]` at truncation level `level`, checked at `level + 1`.
pub fn index_compute(
    model: &ModelPreset,
    g: &LocalMatrix,
    layer: IndexLayer,
    level: u32,
) -> Result<IndexResult, PadicError> {
    let a = index_at(model, g, level)?;
    let b = index_at(model, g, level + 1)?;
    if (a.index, a.orbit_size) != (b.index, b.orbit_size) {
        return Err(PadicError::LevelTooLow(level));
    }
    Ok(match layer {
        IndexLayer::Full => IndexResult { index: 1, ..a },
        IndexLayer::D => a,
    })
}
