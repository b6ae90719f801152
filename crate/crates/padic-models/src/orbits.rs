//! Partition of a coset list under the left action of `U = H ∩ K`.
//!
//! Each coset is acted on through its Hermite representative; the generators of `U`
//! are truncated at a level `N` (root-group parameters `ϖ^j`, `j ≤ N`), and the
//! computation is repeated at `N + 1` as a consistency guard.

use std::collections::HashMap;

use coset_decomposer::MixedClassTable;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::PadicError;
use crate::lattice::{key_of_res, CosetKey};
use crate::model::{ModelPreset, UGenerator};

/// The orbits of `U` on a list of cosets (indices into the list).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    /// Orbits, each sorted, ordered by smallest member.
    pub orbits: Vec<Vec<usize>>,
    /// Truncation level used.
    pub level: u32,
}

impl OrbitPartition {
    /// Orbit sizes in orbit order.
    pub fn sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(|o| o.len()).collect()
    }

    /// The orbit containing coset `i`.
    pub fn orbit_of(&self, i: usize) -> Option<usize> {
        self.orbits.iter().position(|o| o.binary_search(&i).is_ok())
    }

    /// JSON rendering: level, count and sizes.
    pub fn to_json(&self) -> Value {
        json!({"level": self.level, "count": self.orbits.len(), "sizes": self.sizes()})
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// `u · gK` as a canonical key.
pub(crate) fn act(model: &ModelPreset, u: &UGenerator, key: &CosetKey) -> Result<CosetKey, PadicError> {
    let ring = model.ring();
    let h = ring.mat_mul(&u.matrix, &key.hermite_matrix(ring));
    key_of_res(ring, h, key.shift, key.gm)
}

fn partition_at(model: &ModelPreset, keys: &[CosetKey], level: u32) -> Result<OrbitPartition, PadicError> {
    let index: HashMap<&CosetKey, usize> = keys.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let gens = model.u_generators(level)?;
    let mut parent: Vec<usize> = (0..keys.len()).collect();
    for u in &gens {
        let images: Vec<usize> = keys
            .par_iter()
            .map(|k| {
                let image = act(model, u, k)?;
                index
                    .get(&image)
                    .copied()
                    .ok_or_else(|| PadicError::NotInGroup(format!("{} moves a coset outside the list", u.name)))
            })
            .collect::<Result<_, _>>()?;
        for (i, j) in images.into_iter().enumerate() {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
    for i in 0..keys.len() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    let mut orbits: Vec<Vec<usize>> = groups.into_values().collect();
    orbits.sort();
    Ok(OrbitPartition { orbits, level })
}

/// The default level `2 + max |valuation|` over the Hermite diagonals of the list.
pub fn default_level(keys: &[CosetKey]) -> u32 {
    2 + keys
        .iter()
        .flat_map(|k| k.diagonal())
        .map(|v| v.unsigned_abs() as u32)
        .max()
        .unwrap_or(0)
}

/// Orbits of `U` on `keys` at level `level`, re-run at `level + 1`.
pub fn u_orbit_partition(model: &ModelPreset, keys: &[CosetKey], level: u32) -> Result<OrbitPartition, PadicError> {
    let a = partition_at(model, keys, level)?;
    let b = partition_at(model, keys, level + 1)?;
    if a.orbits != b.orbits {
        return Err(PadicError::LevelTooLow(level));
    }
    Ok(a)
}

/// Assignment of the classes of a mixed table to the orbits of a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassMatch {
    /// For each class of the table, the orbit containing its representative.
    pub class_orbit: Vec<usize>,
    /// True when the classes hit every orbit exactly once.
    pub bijective: bool,
}

/// Locates each class representative `ϖ^λτ_i` among the orbits.
pub fn match_classes(
    model: &ModelPreset,
    table: &MixedClassTable,
    keys: &[CosetKey],
    partition: &OrbitPartition,
) -> Result<ClassMatch, PadicError> {
    let index: HashMap<&CosetKey, usize> = keys.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut class_orbit = Vec::new();
    for class in &table.classes {
        let key = model.coset_key(&model.class_rep(class)?)?;
        let i = *index.get(&key).ok_or_else(|| {
            PadicError::NotInGroup(format!(
                "class ϖ^{:?}τ{} is not in the double coset",
                class.lambda, class.tau_index
            ))
        })?;
        class_orbit.push(partition.orbit_of(i).expect("every coset lies in an orbit"));
    }
    let mut sorted = class_orbit.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let bijective = sorted.len() == class_orbit.len() && sorted.len() == partition.orbits.len();
    Ok(ClassMatch { class_orbit, bijective })
}
