//! Worked decompositions with known totals.

use coset_decomposer::{
    case_mixed_tables, gln_minuscule_total, gln_mixed_degree, gln_mixed_table, schubert_symbols, spherical_cells,
    LayerIndex,
};
use exact_algebra::{BigInt, HalfPowerLaurent};
use root_datum::Preset;

fn q(coeffs: &[i64]) -> HalfPowerLaurent {
    HalfPowerLaurent::from_q_coeffs(coeffs)
}

#[test]
fn gl2_rho_has_q_plus_one_cosets() {
    let d = spherical_cells(Preset::Gl2, &[1, 0]).unwrap();
    assert_eq!(d.total, q(&[1, 1]));
    assert_eq!(d.cells.len(), 2);
}

#[test]
fn gl2_double_translation_has_q_squared_plus_q() {
    let d = spherical_cells(Preset::Gl2, &[2, 0]).unwrap();
    assert_eq!(d.total, q(&[0, 1, 1]));
    assert_eq!(d.total.eval_int(2).unwrap(), BigInt::from(6).into());
}

#[test]
fn unitary_w0_rho_squared_cells() {
    let d = spherical_cells(Preset::Gu4, &[2, 2, 1]).unwrap();
    assert_eq!(d.total, q(&[0, 1, 0, 1, 1, 0, 1]));
    let sizes: Vec<u32> = d.cells.iter().map(|c| c.size_exp).collect();
    assert_eq!(sizes, vec![1, 3, 4, 6]);
    let taus: Vec<usize> = d.cells.iter().map(|c| c.tau.len()).collect();
    assert_eq!(taus, vec![0, 1, 2, 3]);
}

#[test]
fn symplectic_w0_rho_squared_cells() {
    let d = spherical_cells(Preset::Gsp4, &[2, 2, 1]).unwrap();
    assert_eq!(d.total, q(&[0, 1, 1, 1, 1]));
}

#[test]
fn unitary_long_operator_count() {
    let d = spherical_cells(Preset::Gu4, &[4, 3, 3]).unwrap();
    assert_eq!(d.total, q(&[0, 0, 0, 0, 1, 1, 0, 1, 1]));
    assert_eq!(d.total.eval_int(3).unwrap(), BigInt::from(9072).into());
}

#[test]
fn schubert_symbols_of_gl4_middle_operator() {
    let syms = schubert_symbols(4, 2).unwrap();
    assert_eq!(syms.len(), 6);
    assert_eq!(gln_minuscule_total(4, 2).unwrap(), q(&[1, 1, 2, 1, 1]));
    let dims: Vec<usize> = syms.iter().map(|s| s.dimension()).collect();
    assert_eq!(dims.iter().filter(|&&d| d == 2).count(), 2);
    assert!(schubert_symbols(4, 0).is_err());
    assert!(schubert_symbols(4, 5).is_err());
}

#[test]
fn gl4_mixed_table_middle_operator() {
    let t = gln_mixed_table(2, 2).unwrap();
    assert_eq!(t.classes.len(), 6);
    let per_kappa: Vec<usize> = [(2, 0), (1, 1), (0, 2)]
        .iter()
        .map(|&(k1, k2)| {
            let lam = coset_decomposer::lambda_kappa(2, (k1, k2));
            t.classes.iter().filter(|c| c.lambda == lam).count()
        })
        .collect();
    assert_eq!(per_kappa, vec![3, 2, 1]);
    assert_eq!(gln_mixed_table(2, 4).unwrap().classes.len(), 1);
    let one_plus_q = q(&[1, 1]);
    assert_eq!(t.degree_sum().unwrap(), one_plus_q.clone() * one_plus_q + q(&[5]));
}

#[test]
fn gl4_mixed_degree_residue() {
    let (poly, res, predicted) = gln_mixed_degree(2, (1, 1), 0).unwrap();
    assert_eq!(res, BigInt::from(4));
    assert_eq!(predicted, BigInt::from(4));
    assert_eq!(poly, q(&[1, 1]) * q(&[1, 1]));
    assert!(gln_mixed_degree(2, (1, 1), 2).is_err());
}

#[test]
fn symplectic_case_tables() {
    let tables = case_mixed_tables(Preset::Gsp4).unwrap();
    let rho = tables.iter().find(|t| t.word == "ρ").unwrap();
    assert_eq!(rho.classes.len(), 2);
    assert_eq!(rho.classes[0].degree.clone().unwrap(), q(&[1, 1]) * q(&[1, 1]));
    assert!(rho.classes[1].degree.is_none());
    let w0 = tables.iter().find(|t| t.word == "w0ρ^2").unwrap();
    assert_eq!(w0.classes.len(), 3);
    assert_eq!(w0.classes[0].degree.clone().unwrap(), q(&[0, 1, 1]));
    assert!(w0.classes[2].degree.is_none());
    assert!(tables
        .iter()
        .flat_map(|t| &t.classes)
        .all(|c| c.layer == LayerIndex::QMinusOne));
}

#[test]
fn unitary_case_tables() {
    let tables = case_mixed_tables(Preset::Gu4).unwrap();
    let w0 = tables.iter().find(|t| t.word == "w0ρ^2").unwrap();
    let taus: Vec<usize> = w0.classes.iter().map(|c| c.tau_index).collect();
    assert_eq!(taus, vec![0, 0, 1, 3]);
    let long = tables.iter().find(|t| t.word == "w0w1w0ρ^4").unwrap();
    assert_eq!(long.classes.len(), 3);
    assert_eq!(
        long.classes[0].degree.clone().unwrap(),
        q(&[0, 0, 1]) * q(&[1, 1]) * q(&[1, 1])
    );
    assert_eq!(
        long.classes[0].degree.clone().unwrap().residue_at(-1).unwrap(),
        0.into()
    );
    assert!(long.classes[1].degree.is_none());
    assert_eq!(long.classes[1].layer, LayerIndex::One);
    assert_eq!(w0.classes[3].layer, LayerIndex::QPlusOne);
    assert!(case_mixed_tables(Preset::Gl2).is_err());
}
