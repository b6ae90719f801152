//! Satake polynomials `𝔖(X)` and Hecke polynomials `ℌ_s(X) = 𝒮⁻¹(𝔖(q^{−s}X))`.

use exact_algebra::{HalfPowerLaurent, OrbitPolynomial, XPolynomial};
use root_datum::RootDatum;

use crate::error::SatakeError;
use crate::hecke::HeckeCombination;
use crate::transform::{satake_inverse, TransformTable};

/// `∏_{μ ∈ list} (1 − e^μ X)` for an explicit list of monomials.
pub fn satake_poly_from_monomials(rank: usize, monomials: &[Vec<i64>]) -> XPolynomial<OrbitPolynomial> {
    monomials
        .iter()
        .fold(XPolynomial::new(vec![OrbitPolynomial::one(rank)]), |acc, mu| {
            acc.mul(&XPolynomial::new(vec![
                OrbitPolynomial::one(rank),
                -OrbitPolynomial::exp(mu.clone()),
            ]))
        })
}

/// `𝔖_λ(X) = ∏_{μ ∈ Wλ} (1 − e^μ X)` for dominant minuscule `λ` of a split datum.
pub fn minuscule_satake_poly(datum: &RootDatum, lambda: &[i64]) -> Result<XPolynomial<OrbitPolynomial>, SatakeError> {
    if (0..datum.roots().len()).any(|i| datum.param(i) != 1) {
        return Err(SatakeError::NotSplit(datum.name().to_string()));
    }
    if !datum.is_minuscule(lambda)? {
        return Err(SatakeError::NotMinuscule(lambda.to_vec()));
    }
    let orbit: Vec<Vec<i64>> = datum.orbit(lambda).into_iter().collect();
    Ok(satake_poly_from_monomials(datum.rank(), &orbit))
}

/// The Hecke polynomial centred at `s = s_twice / 2`: the `k`-th coefficient is
/// `𝒮⁻¹(q^{−ks} · 𝔖_k)`.
pub fn hecke_polynomial(
    satake: &XPolynomial<OrbitPolynomial>,
    s_twice: i64,
    table: &TransformTable,
) -> Result<XPolynomial<HeckeCombination>, SatakeError> {
    satake.try_map(|k, c| {
        let shifted = c.scale(&HalfPowerLaurent::q_half_pow(-(k as i64) * s_twice));
        satake_inverse(&shifted, table)
    })
}

/// Dominant cocharacters whose transforms are needed to invert `𝔖`.
pub fn required_budget(datum: &RootDatum, satake: &XPolynomial<OrbitPolynomial>) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = satake
        .coeffs()
        .iter()
        .flat_map(|c| {
            c.support()
                .filter(|m| datum.is_dominant(m))
                .cloned()
                .collect::<Vec<_>>()
        })
        .collect();
    out.sort();
    out.dedup();
    out
}
