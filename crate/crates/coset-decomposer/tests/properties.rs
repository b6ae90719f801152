//! Structural identities of the decompositions.

use coset_decomposer::{gln_minuscule_total, gln_mixed_degree, gln_mixed_table, l_kappa, partitions, spherical_cells};
use exact_algebra::{gaussian_binomial, BigInt};
use proptest::prelude::*;
use root_datum::Preset;

#[test]
fn mixed_degree_residues_are_binomial_products() {
    for m in 1..=3usize {
        for k in 0..=2 * m {
            for kappa in partitions(m, k) {
                for r in 0..=l_kappa(m, kappa) {
                    let (_, res, predicted) = gln_mixed_degree(m, kappa, r).unwrap();
                    assert_eq!(res, predicted, "m={m} κ={kappa:?} r={r}");
                }
            }
        }
    }
}

#[test]
fn mixed_degrees_are_gaussian_binomial_products() {
    for m in 1..=3usize {
        for k in 0..=2 * m {
            for kappa in partitions(m, k) {
                for r in 0..=l_kappa(m, kappa) {
                    let (poly, _, _) = gln_mixed_degree(m, kappa, r).unwrap();
                    let n = (m - r) as u32;
                    let expected = gaussian_binomial(n, (kappa.0 - r) as u32) * gaussian_binomial(n, kappa.1 as u32);
                    assert_eq!(poly, expected, "m={m} κ={kappa:?} r={r}");
                }
            }
        }
    }
}

#[test]
fn minuscule_cells_match_schubert_count() {
    for n in 2..=4usize {
        for k in 1..n {
            let mut lam = vec![0i64; n + 1];
            lam[0] = k as i64;
            for x in lam.iter_mut().skip(1).take(k) {
                *x = 1;
            }
            let d = spherical_cells(Preset::Gln(n), &lam).unwrap();
            assert_eq!(d.total, gln_minuscule_total(n, k).unwrap(), "n={n} k={k}");
            assert_eq!(d.total, gaussian_binomial(n as u32, k as u32));
        }
    }
}

#[test]
fn gl_mixed_table_residues_add_up() {
    for m in 1..=3usize {
        for k in 0..=2 * m {
            let t = gln_mixed_table(m, k).unwrap();
            let expected: BigInt = t
                .classes
                .iter()
                .map(|c| {
                    let k1 = c.lambda[1..=m].iter().sum::<i64>() as usize;
                    gln_mixed_degree(m, (k1, k - k1), c.tau_index).unwrap().2
                })
                .sum();
            assert_eq!(t.degree_sum().unwrap().residue_at(1).unwrap(), expected, "m={m} k={k}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn gl2_totals_match_cartan_count(b in -3i64..=3, gap in 0i64..=4) {
        let a = b + gap;
        let d = spherical_cells(Preset::Gl2, &[a, b]).unwrap();
        let n = (a - b).abs();
        let expected = if n == 0 { 1 } else { 3i64.pow(n as u32 - 1) * 4 };
        prop_assert_eq!(d.total.eval_int(3).unwrap(), exact_algebra::BigInt::from(expected).into());
        let mut sizes: Vec<u32> = d.cells.iter().map(|c| c.size_exp).collect();
        sizes.dedup();
        prop_assert_eq!(sizes.len(), d.cells.len());
    }
}
