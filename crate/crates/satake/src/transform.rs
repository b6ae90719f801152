//! The Satake transform: Macdonald's formula, transform tables, triangular
//! inversion, transposition and reduction modulo `q^{1/2} − 1`.

use std::collections::{BTreeMap, BTreeSet};

use exact_algebra::{BigInt, HalfPowerLaurent, OrbitPolynomial};
use root_datum::{Preset, RootDatum};
use weyl_engine::WeylGroup;

use crate::error::SatakeError;
use crate::hecke::HeckeCombination;

/// The orbit sum `e^{Wλ} = Σ_{μ ∈ Wλ} e^μ`.
pub fn orbit_sum(datum: &RootDatum, lambda: &[i64]) -> OrbitPolynomial {
    OrbitPolynomial::from_terms(datum.orbit(lambda).into_iter().map(|mu| (mu, HalfPowerLaurent::one())))
}

/// `q^{⟨λ,δ⟩}`.
pub fn q_delta(datum: &RootDatum, lambda: &[i64]) -> HalfPowerLaurent {
    let twice = datum.pair_delta(lambda).expect("rank checked").twice;
    HalfPowerLaurent::q_half_pow(twice)
}

/// Decomposes a Weyl-invariant element as `Σ c_μ e^{Wμ}` over dominant `μ`.
pub fn orbit_decomposition(
    datum: &RootDatum,
    f: &OrbitPolynomial,
) -> Result<BTreeMap<Vec<i64>, HalfPowerLaurent>, SatakeError> {
    for (mu, c) in f.terms() {
        for i in 1..=datum.num_simple() {
            if f.coeff(&datum.simple_reflect(mu, i)) != *c {
                return Err(SatakeError::NotInvariant(mu.clone()));
            }
        }
    }
    Ok(f.terms()
        .filter(|(mu, _)| datum.is_dominant(mu))
        .map(|(mu, c)| (mu.clone(), c.clone()))
        .collect())
}

/// Macdonald's formula for the transform of `(Kϖ^λK)` of a split group:
///
/// `q^{⟨λ,δ⟩} / W_λ(q^{-1}) · Σ_w e^{wλ} ∏_{α>0} (1 − q^{-1}e^{−wα∨}) / (1 − e^{−wα∨})`.
///
/// Each term is put over the common denominator `∏_{α>0}(1 − e^{−α∨})` using
/// `1/(1 − e^{γ∨}) = −e^{−γ∨}/(1 − e^{−γ∨})`, after which the sum is divided
/// exactly, factor by factor.
pub fn macdonald(datum: &RootDatum, group: &WeylGroup, lambda: &[i64]) -> Result<OrbitPolynomial, SatakeError> {
    if (0..datum.roots().len()).any(|i| datum.param(i) != 1) {
        return Err(SatakeError::NotSplit(datum.name().to_string()));
    }
    if !datum.is_dominant(lambda) {
        return Err(SatakeError::NotDominant(lambda.to_vec()));
    }
    let r = datum.rank();
    let q_inv = HalfPowerLaurent::q_pow(-1);
    let one = OrbitPolynomial::one(r);
    let positive: Vec<usize> = datum.positive_indices().collect();
    let mut numerator = OrbitPolynomial::zero();
    for w in group.elements() {
        let mut term = OrbitPolynomial::exp(w.apply(lambda));
        for &i in &positive {
            let beta = w.apply(&datum.coroots()[i]);
            let j = datum
                .coroots()
                .iter()
                .position(|c| *c == beta)
                .expect("Weyl group permutes coroots");
            let factor = if datum.is_positive(j) {
                let neg: Vec<i64> = beta.iter().map(|x| -x).collect();
                &one - &OrbitPolynomial::monomial(neg, q_inv.clone())
            } else {
                &OrbitPolynomial::monomial(vec![0; r], q_inv.clone()) - &OrbitPolynomial::exp(beta)
            };
            term = &term * &factor;
        }
        numerator = &numerator + &term;
    }
    let mut quotient = numerator;
    for &i in &positive {
        let neg: Vec<i64> = datum.coroots()[i].iter().map(|x| -x).collect();
        quotient = quotient.exact_divide(&(&one - &OrbitPolynomial::exp(neg)))?;
    }
    let stab_poly = group
        .stabilizer(lambda)
        .iter()
        .fold(HalfPowerLaurent::zero(), |acc, w| {
            acc + HalfPowerLaurent::q_pow(-(w.length as i64))
        });
    let qd = q_delta(datum, lambda);
    let mut out = OrbitPolynomial::zero();
    for (mu, c) in quotient.terms() {
        out.add_term(mu.clone(), &(&c.exact_div(&stab_poly)? * &qd));
    }
    Ok(out)
}

/// Multiplies a transform by `e^{λ₀}` for central `λ₀`, modelling `(Kϖ^{λ+λ₀}K)`.
pub fn central_shift(
    datum: &RootDatum,
    entry: &OrbitPolynomial,
    lambda0: &[i64],
) -> Result<OrbitPolynomial, SatakeError> {
    if !datum.is_central(lambda0) {
        return Err(SatakeError::NotCentral(lambda0.to_vec()));
    }
    Ok(entry.shift(lambda0))
}

/// The two multi-orbit transforms of the unitary group, entered as data.
fn gu4_constants(datum: &RootDatum) -> BTreeMap<Vec<i64>, OrbitPolynomial> {
    let q = |k: i64| HalfPowerLaurent::q_pow(k);
    let p = HalfPowerLaurent::from_q_coeffs;
    let mut out = BTreeMap::new();
    // q³e^{W(2,2,1)} + (q−1)(q²+1)e^{(2,1,1)}
    out.insert(
        vec![2, 2, 1],
        &orbit_sum(datum, &[2, 2, 1]).scale(&q(3))
            + &OrbitPolynomial::monomial(vec![2, 1, 1], &p(&[-1, 1]) * &p(&[1, 0, 1])),
    );
    // q⁴e^{W(4,3,3)} + q³(q−1)e^{W(4,3,2)} + q(q−1)(1+q+2q²)e^{(4,2,2)}
    out.insert(
        vec![4, 3, 3],
        &(&orbit_sum(datum, &[4, 3, 3]).scale(&q(4)) + &orbit_sum(datum, &[4, 3, 2]).scale(&(&q(3) * &p(&[-1, 1]))))
            + &OrbitPolynomial::monomial(vec![4, 2, 2], &(&q(1) * &p(&[-1, 1])) * &p(&[1, 1, 2])),
    );
    out
}

/// How a table entry was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EntrySource {
    /// Macdonald's formula.
    Macdonald,
    /// Dominant support is `{λ}`, so only the leading term `q^{⟨λ,δ⟩}e^{Wλ}` survives.
    SingletonSupport,
    /// A recorded constant.
    Constant,
    /// A recorded constant multiplied by a central `e^{λ₀}`.
    CentralShift,
}

/// Satake transforms `𝒮(Kϖ^λK)` for a finite set of dominant `λ`.
#[derive(Clone, Debug)]
pub struct TransformTable {
    datum: RootDatum,
    entries: BTreeMap<Vec<i64>, (OrbitPolynomial, EntrySource)>,
}

impl TransformTable {
    /// Builds the table on the closure of `budget` under taking dominant supports.
    pub fn build(preset: Preset, budget: &[Vec<i64>]) -> Result<Self, SatakeError> {
        let datum = preset.datum();
        let group = WeylGroup::new(&datum);
        let constants = if preset == Preset::Gu4 {
            gu4_constants(&datum)
        } else {
            BTreeMap::new()
        };
        let mut needed = BTreeSet::new();
        for lambda in budget {
            needed.extend(datum.dominant_support(lambda)?);
        }
        let mut entries = BTreeMap::new();
        for lambda in needed {
            let support = datum.dominant_support(&lambda)?;
            let entry = if support.len() == 1 {
                (
                    orbit_sum(&datum, &lambda).scale(&q_delta(&datum, &lambda)),
                    EntrySource::SingletonSupport,
                )
            } else if let Some(c) = constants.get(&lambda) {
                (c.clone(), EntrySource::Constant)
            } else if let Some((k, c)) = constants.iter().find(|(k, _)| {
                let d: Vec<i64> = lambda.iter().zip(k.iter()).map(|(a, b)| a - b).collect();
                datum.is_central(&d)
            }) {
                let d: Vec<i64> = lambda.iter().zip(k.iter()).map(|(a, b)| a - b).collect();
                (central_shift(&datum, c, &d)?, EntrySource::CentralShift)
            } else if preset.is_split() {
                (macdonald(&datum, &group, &lambda)?, EntrySource::Macdonald)
            } else {
                return Err(SatakeError::MissingEntry(lambda));
            };
            entries.insert(lambda, entry);
        }
        Ok(Self { datum, entries })
    }

    /// The root datum.
    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    /// The transform of `(Kϖ^λK)`.
    pub fn get(&self, lambda: &[i64]) -> Result<&OrbitPolynomial, SatakeError> {
        self.entries
            .get(lambda)
            .map(|(e, _)| e)
            .ok_or_else(|| SatakeError::MissingEntry(lambda.to_vec()))
    }

    /// How the entry for `λ` was obtained.
    pub fn source(&self, lambda: &[i64]) -> Option<EntrySource> {
        self.entries.get(lambda).map(|(_, s)| *s)
    }

    /// All tabulated `λ`.
    pub fn keys(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.entries.keys()
    }

    /// The forward transform of a combination.
    pub fn transform(&self, h: &HeckeCombination) -> Result<OrbitPolynomial, SatakeError> {
        let mut out = OrbitPolynomial::zero();
        for (lambda, c) in h.terms() {
            out = &out + &self.get(lambda)?.scale(c);
        }
        Ok(out)
    }
}

/// Inverts the transform by triangular elimination: repeatedly strip the
/// coefficient of a ⪰-maximal dominant orbit using its table entry, whose
/// leading coefficient is `q^{⟨μ,δ⟩}`.
pub fn satake_inverse(f: &OrbitPolynomial, table: &TransformTable) -> Result<HeckeCombination, SatakeError> {
    let datum = table.datum();
    orbit_decomposition(datum, f)?;
    let maximal = |rem: &OrbitPolynomial| -> Option<Vec<i64>> {
        let dom: Vec<&Vec<i64>> = rem.support().filter(|m| datum.is_dominant(m)).collect();
        dom.iter()
            .filter(|&&m| !dom.iter().any(|&n| n != m && datum.succeq(n, m)))
            .max()
            .map(|m| (*m).clone())
    };
    let mut bound = 1usize;
    {
        let dom: Vec<&Vec<i64>> = f.support().filter(|m| datum.is_dominant(m)).collect();
        for m in &dom {
            if !dom.iter().any(|n| n != m && datum.succeq(n, m)) {
                bound += datum.dominant_support(m)?.len();
            }
        }
    }
    let mut rem = f.clone();
    let mut out = HeckeCombination::zero();
    let mut steps = 0usize;
    while let Some(mu) = maximal(&rem) {
        steps += 1;
        if steps > bound {
            return Err(SatakeError::NonTermination(bound));
        }
        let entry = table.get(&mu)?;
        let twice = datum.pair_delta(&mu)?.twice;
        let c = rem.coeff(&mu).shift(-twice);
        out.add_term(mu.clone(), &c);
        rem = &rem - &entry.scale(&c);
        if !rem.coeff(&mu).is_zero() {
            return Err(SatakeError::MissingEntry(mu));
        }
    }
    if !rem.is_zero() {
        let left = rem.support().next().cloned().unwrap_or_default();
        return Err(SatakeError::NotInvariant(left));
    }
    Ok(out)
}

/// The transposition `(Kϖ^λK) ↦ (Kϖ^{−λ^opp}K)`; requires `w∘ = −1`.
pub fn transpose(datum: &RootDatum, h: &HeckeCombination) -> Result<HeckeCombination, SatakeError> {
    if !datum.longest_is_minus_one() {
        return Err(SatakeError::OppositionNotMinusOne(datum.name().to_string()));
    }
    Ok(h.map_lattice(|l| datum.opp(l).into_iter().map(|x| -x).collect()))
}

/// The naive lift `ξ_f = Σ c_μ (Kϖ^μK)` of `f = Σ c_μ e^{Wμ}`.
pub fn naive_lift(datum: &RootDatum, f: &OrbitPolynomial) -> Result<HeckeCombination, SatakeError> {
    Ok(HeckeCombination::from_terms(orbit_decomposition(datum, f)?))
}

fn residues(h: &HeckeCombination) -> Result<BTreeMap<Vec<i64>, BigInt>, SatakeError> {
    let mut out = BTreeMap::new();
    for (l, c) in h.terms() {
        let r = c.residue_at(1)?;
        if r != BigInt::from(0) {
            out.insert(l.clone(), r);
        }
    }
    Ok(out)
}

/// True iff `[ξ] = [ξ_f] = [𝒮⁻¹(f)]` modulo `q^{1/2} − 1`, where `ξ_f` is the naive lift of `f`.
pub fn modq_check(f: &OrbitPolynomial, xi: &HeckeCombination, table: &TransformTable) -> Result<bool, SatakeError> {
    let lift = residues(&naive_lift(table.datum(), f)?)?;
    let inv = residues(&satake_inverse(f, table)?)?;
    let given = residues(xi)?;
    Ok(lift == inv && inv == given)
}
