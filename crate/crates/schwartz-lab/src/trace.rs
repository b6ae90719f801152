//! The trace criterion and the constructive trace preimage.
//!
//! For `V ⊴ W` and a `W`-invariant `φ`, `φ` is a trace `Σ_{γ ∈ W/V} γ·ψ` of a
//! `V`-invariant `ψ` exactly when `φ(x) ∈ [V_x : V]·R` for every `x` in the support.
//! Values here are integers and `[V_x : V]` divides `|W/V|`, which is prime to `p` in all
//! uses, so membership in `[V_x : V]·Z[1/p]` is tested as integer divisibility.
//!
//! The preimage is built orbit by orbit: on the `W`-orbit of `x` put
//! `ψ = φ(x)/[V_x : V]` on the `V`-orbit `x·V` and zero elsewhere. A point `x·w` lies in
//! `x·V` exactly when `χ(w) ∈ χ(Stab_W(x))`.

use crate::action::{FiniteAction, Orbit};
use crate::error::SchwartzError;

/// A support point failing the divisibility test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceWitness {
    /// The point.
    pub point: usize,
    /// `φ(x)`.
    pub value: i64,
    /// `[V_x : V]`.
    pub index: u64,
}

/// Result of [`trace_preimage`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceOutcome {
    /// A `V`-invariant preimage, whose trace has been re-verified to equal `φ`.
    Preimage(Vec<i64>),
    /// A point where the criterion fails.
    Witness(TraceWitness),
}

fn check_len(values: &[i64], w: &FiniteAction) -> Result<(), SchwartzError> {
    if values.len() != w.num_points() {
        return Err(SchwartzError::Incompatible);
    }
    Ok(())
}

/// Checks `φ(y·g) = φ(y)` for every point and generator.
pub fn check_invariant(values: &[i64], w: &FiniteAction) -> Result<(), SchwartzError> {
    check_len(values, w)?;
    for g in 0..w.num_generators() {
        if let Some(y) = (0..values.len()).find(|&y| values[w.image(g, y)] != values[y]) {
            return Err(SchwartzError::NotInvariant { point: y, generator: g });
        }
    }
    Ok(())
}

/// Checks `V`-invariance: inside the `W`-orbit of `x`, the points `x·w` and `x·w′` share a
/// `V`-orbit exactly when `χ(w) − χ(w′) ∈ χ(Stab_W(x))`.
fn check_v_invariant(values: &[i64], orbits: &[Orbit]) -> Result<(), SchwartzError> {
    for o in orbits {
        let g = o.stabilizer_gcd;
        let mut by_class: std::collections::HashMap<u64, i64> = std::collections::HashMap::new();
        for (&y, &t) in o.points.iter().zip(&o.transversal) {
            let prev = *by_class.entry(t % g).or_insert(values[y]);
            if prev != values[y] {
                return Err(SchwartzError::NotInvariant {
                    point: y,
                    generator: usize::MAX,
                });
            }
        }
    }
    Ok(())
}

/// The `W`-orbits meeting the support, each computed once.
fn support_orbits(values: &[i64], w: &FiniteAction) -> Vec<Orbit> {
    let mut seen = vec![false; values.len()];
    let mut out = Vec::new();
    for x in 0..values.len() {
        if values[x] != 0 && !seen[x] {
            let o = w.orbit(x);
            for &y in &o.points {
                seen[y] = true;
            }
            out.push(o);
        }
    }
    out
}

fn first_witness(values: &[i64], orbits: &[Orbit]) -> Option<TraceWitness> {
    orbits.iter().find_map(|o| {
        let index = o.stabilizer_index();
        (values[o.base] % index as i64 != 0).then(|| TraceWitness {
            point: o.base,
            value: values[o.base],
            index,
        })
    })
}

/// `[V_x : V]` for a base point of every `W`-orbit meeting the support.
pub fn support_stabilizer_indices(values: &[i64], w: &FiniteAction) -> Result<Vec<u64>, SchwartzError> {
    check_len(values, w)?;
    Ok(support_orbits(values, w).iter().map(Orbit::stabilizer_index).collect())
}

/// `Σ_{γ ∈ W/V} γ·ψ`, i.e. `y ↦ Σ_γ ψ(y·γ)`.
pub fn trace_sum(values: &[i64], w: &FiniteAction) -> Result<Vec<i64>, SchwartzError> {
    check_len(values, w)?;
    let reps = w.quotient_representatives();
    Ok((0..values.len())
        .map(|y| reps.iter().map(|word| values[w.image_word(word, y)]).sum())
        .collect())
}

/// Whether every support point passes `[V_x : V] | φ(x)`.
pub fn trace_check(values: &[i64], w: &FiniteAction) -> Result<bool, SchwartzError> {
    check_invariant(values, w)?;
    Ok(first_witness(values, &support_orbits(values, w)).is_none())
}

/// A `V`-invariant preimage of `φ` under the trace, or a witness that none exists.
pub fn trace_preimage(values: &[i64], w: &FiniteAction) -> Result<TraceOutcome, SchwartzError> {
    check_invariant(values, w)?;
    let orbits = support_orbits(values, w);
    if let Some(witness) = first_witness(values, &orbits) {
        return Ok(TraceOutcome::Witness(witness));
    }
    let mut psi = vec![0i64; values.len()];
    for o in &orbits {
        let share = values[o.base] / o.stabilizer_index() as i64;
        for (&y, &t) in o.points.iter().zip(&o.transversal) {
            if t % o.stabilizer_gcd == 0 {
                psi[y] = share;
            }
        }
    }
    check_v_invariant(&psi, &orbits)?;
    let retrace = trace_sum(&psi, w)?;
    if let Some(y) = (0..values.len()).find(|&y| retrace[y] != values[y]) {
        return Err(SchwartzError::Mismatch {
            what: "trace of the constructed preimage".into(),
            point: vec![y as i64],
            expected: values[y],
            found: retrace[y],
        });
    }
    Ok(TraceOutcome::Preimage(psi))
}
