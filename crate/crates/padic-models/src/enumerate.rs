//! Materialization of every left coset in `Kϖ^λK / K` from the Bruhat cells.
//!
//! A cell with reduced word `s₁⋯s_ℓ·ω` contributes the cosets of
//! `g_{s₁}(κ₁) ⋯ g_{s_ℓ}(κ_ℓ) ω` over all parameter tuples, where `ω = ρ^k ϖ^{−c}` for
//! `ω = ρ^k t(c)`. The enumeration fails loudly on a duplicate coset, a coset outside the
//! double coset, or a total that differs from the symbolic count at `q = p`.

use std::collections::HashMap;

use coset_decomposer::spherical_cells;
use exact_algebra::{BigInt, BigRational};

use crate::error::PadicError;
use crate::lattice::CosetKey;
use crate::matrix::LocalMatrix;
use crate::model::ModelPreset;

/// One enumerated coset.
#[derive(Clone, Debug)]
pub struct EnumeratedCoset {
    /// A representative `g` of `gK`.
    pub matrix: LocalMatrix,
    /// The canonical key of `gK`.
    pub key: CosetKey,
    /// Index of the Bruhat cell.
    pub cell: usize,
    /// Indices of the residue parameters, one per letter of the cell word.
    pub params: Vec<usize>,
}

/// All cosets of `Kϖ^λK / K`.
#[derive(Clone, Debug)]
pub struct Enumeration {
    /// The dominant cocharacter.
    pub lambda: Vec<i64>,
    /// The cell words, in cell order.
    pub cell_words: Vec<String>,
    /// The cosets.
    pub cosets: Vec<EnumeratedCoset>,
}

impl Enumeration {
    /// The coset keys in enumeration order.
    pub fn keys(&self) -> Vec<CosetKey> {
        self.cosets.iter().map(|c| c.key.clone()).collect()
    }
}

/// Multiplies out one cell: depth-first over parameters, reusing prefix products.
fn expand(
    model: &ModelPreset,
    letters: &[usize],
    omega: &LocalMatrix,
    prefix: LocalMatrix,
    params: &mut Vec<usize>,
    out: &mut Vec<(LocalMatrix, Vec<usize>)>,
) -> Result<(), PadicError> {
    match letters.split_first() {
        None => out.push((prefix.mul(omega), params.clone())),
        Some((&s, rest)) => {
            for (i, kappa) in model.residues(s).into_iter().enumerate() {
                params.push(i);
                expand(model, rest, omega, prefix.mul(&model.g(s, kappa)?), params, out)?;
                params.pop();
            }
        }
    }
    Ok(())
}

/// Enumerates `Kϖ^λK / K` and validates it against the symbolic cell decomposition.
pub fn enumerate_cells(model: &ModelPreset, lambda: &[i64]) -> Result<Enumeration, PadicError> {
    let decomposition = spherical_cells(model.preset(), lambda)?;
    let mut seen: HashMap<CosetKey, (usize, Vec<usize>)> = HashMap::new();
    let mut cosets = Vec::new();
    let mut cell_words = Vec::new();
    for (ci, cell) in decomposition.cells.iter().enumerate() {
        let word = &cell.word;
        let rho_part = model
            .rho()
            .monomial_pow(word.rho_power)
            .ok_or_else(|| PadicError::NotInGroup("ρ is not monomial".into()))?;
        let neg_central: Vec<i64> = word.central.iter().map(|c| -c).collect();
        let omega = rho_part.mul(&model.torus(&neg_central)?);
        let mut products = Vec::new();
        expand(
            model,
            &word.letters,
            &omega,
            LocalMatrix::identity(model.prime(), model.dim()),
            &mut Vec::new(),
            &mut products,
        )?;
        for (matrix, params) in products {
            let key = model.coset_key(&matrix)?;
            if seen.contains_key(&key) {
                return Err(PadicError::DuplicateCoset {
                    cell: word.to_string(),
                    params,
                });
            }
            let found = model.cartan_type(&matrix)?;
            if found != lambda {
                return Err(PadicError::WrongDoubleCoset {
                    cell: word.to_string(),
                    expected: lambda.to_vec(),
                    found,
                });
            }
            seen.insert(key.clone(), (ci, params.clone()));
            cosets.push(EnumeratedCoset {
                matrix,
                key,
                cell: ci,
                params,
            });
        }
        cell_words.push(word.to_string());
    }
    let expected = decomposition
        .total
        .eval_int(model.prime() as i64)
        .map_err(|e| PadicError::Unsupported(e.to_string()))?;
    let found = BigRational::from_integer(BigInt::from(cosets.len()));
    if expected != found {
        return Err(PadicError::CountMismatch {
            expected: expected.to_integer().try_into().unwrap_or(u128::MAX),
            found: cosets.len() as u128,
        });
    }
    Ok(Enumeration {
        lambda: lambda.to_vec(),
        cell_words,
        cosets,
    })
}
