//! Structural identities of the GL verdicts.

use exact_algebra::BigInt;
use root_datum::Preset;
use zeta_checker::{class_degrees, zeta_verdict, LayerChoice};

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn residues_are_alternating_binomial_sums() {
    for m in 2..=3usize {
        for c in [1i64, 3] {
            for d in class_degrees(Preset::Gln(2 * m), c, LayerChoice::Standard).unwrap() {
                let (i, k2) = (d.tau as i64, d.k2.unwrap() as i64);
                let m = m as i64;
                let expected: i64 = (i..=m)
                    .map(|k1| {
                        let sign = if (k1 + k2) % 2 == 0 { 1 } else { -1 };
                        sign * binomial(m - i, m - k1) * binomial(m - i, k2)
                    })
                    .sum();
                assert_eq!(d.degree.residue_at(1).unwrap(), BigInt::from(expected), "{}", d.label);
                if i < m {
                    assert_eq!(expected, 0, "{}", d.label);
                }
            }
        }
    }
}

#[test]
fn verdicts_are_invariant_under_even_shifts_of_c() {
    for m in 1..=3usize {
        let base = zeta_verdict(Preset::Gln(2 * m), 1, LayerChoice::Standard).unwrap();
        for c in [3i64, 5, -1] {
            let v = zeta_verdict(Preset::Gln(2 * m), c, LayerChoice::Standard).unwrap();
            let a: Vec<_> = base.classes.iter().map(|x| (x.residue.clone(), x.pass)).collect();
            let b: Vec<_> = v.classes.iter().map(|x| (x.residue.clone(), x.pass)).collect();
            assert_eq!(a, b, "m = {m}, c = {c}");
        }
    }
}
