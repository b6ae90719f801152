//! Reference transforms, inversions and Hecke polynomials.

use exact_algebra::{HalfPowerLaurent as L, OrbitPolynomial, XPolynomial};
use root_datum::Preset;
use satake::{
    central_shift, hecke_polynomial, macdonald, minuscule_satake_poly, modq_check, orbit_sum, satake_inverse,
    satake_poly_from_monomials, transpose, EntrySource, HeckeCombination, SatakeError, TransformTable,
};
use weyl_engine::WeylGroup;

fn e(l: &[i64]) -> OrbitPolynomial {
    OrbitPolynomial::exp(l.to_vec())
}

fn poly(c: &[i64]) -> L {
    L::from_q_coeffs(c)
}

fn hc(terms: &[(&[i64], L)]) -> HeckeCombination {
    HeckeCombination::from_terms(terms.iter().map(|(l, c)| (l.to_vec(), c.clone())))
}

#[test]
fn gl2_macdonald_goldens() {
    let d = Preset::Gl2.datum();
    let g = WeylGroup::new(&d);
    let f1 = macdonald(&d, &g, &[1, 0]).unwrap();
    assert_eq!(f1, (&e(&[1, 0]) + &e(&[0, 1])).scale(&L::q_half_pow(1)));
    let f2 = macdonald(&d, &g, &[2, 0]).unwrap();
    let expected = &(&e(&[2, 0]) + &e(&[0, 2])).scale(&L::q()) + &e(&[1, 1]).scale(&poly(&[-1, 1]));
    assert_eq!(f2, expected);
    assert_eq!(macdonald(&d, &g, &[3, 3]).unwrap(), e(&[3, 3]));
    assert!(matches!(macdonald(&d, &g, &[0, 1]), Err(SatakeError::NotDominant(_))));
    let gu4 = Preset::Gu4.datum();
    assert!(matches!(
        macdonald(&gu4, &WeylGroup::new(&gu4), &[2, 2, 1]),
        Err(SatakeError::NotSplit(_))
    ));
}

#[test]
fn gsp4_macdonald_matches_coset_count() {
    let d = Preset::Gsp4.datum();
    let g = WeylGroup::new(&d);
    let s = macdonald(&d, &g, &[2, 2, 1]).unwrap();
    let expected = &orbit_sum(&d, &[2, 2, 1]).scale(&L::q_pow(2)) + &e(&[2, 1, 1]).scale(&poly(&[-1, 0, 1]));
    assert_eq!(s, expected);
}

#[test]
fn unitary_table() {
    let t = TransformTable::build(Preset::Gu4, &[vec![2, 2, 1], vec![4, 3, 3], vec![1, 1, 1]]).unwrap();
    let d = t.datum().clone();
    let expected =
        &orbit_sum(&d, &[2, 2, 1]).scale(&L::q_pow(3)) + &e(&[2, 1, 1]).scale(&(&poly(&[-1, 1]) * &poly(&[1, 0, 1])));
    assert_eq!(t.get(&[2, 2, 1]).unwrap(), &expected);
    assert_eq!(
        t.get(&[1, 1, 1]).unwrap(),
        &orbit_sum(&d, &[1, 1, 1]).scale(&L::q_pow(2))
    );
    assert_eq!(t.source(&[4, 3, 3]), Some(EntrySource::Constant));
    assert_eq!(t.source(&[4, 3, 2]), Some(EntrySource::CentralShift));
    assert_eq!(t.get(&[4, 3, 2]).unwrap(), &expected.shift(&[2, 1, 1]));
    assert_eq!(t.source(&[4, 2, 2]), Some(EntrySource::SingletonSupport));
    let gsp4 = TransformTable::build(Preset::Gsp4, &[vec![1, 1, 1]]).unwrap();
    assert_eq!(
        gsp4.get(&[1, 1, 1]).unwrap(),
        &orbit_sum(gsp4.datum(), &[1, 1, 1]).scale(&L::q_half_pow(3))
    );
}

#[test]
fn central_shifts() {
    let d = Preset::Gu4.datum();
    let f = orbit_sum(&d, &[2, 2, 1]);
    assert_eq!(central_shift(&d, &f, &[0, 0, 0]).unwrap(), f);
    let twice = central_shift(&d, &central_shift(&d, &f, &[2, 1, 1]).unwrap(), &[2, 1, 1]).unwrap();
    assert_eq!(twice, central_shift(&d, &f, &[4, 2, 2]).unwrap());
    assert!(matches!(
        central_shift(&d, &f, &[1, 1, 0]),
        Err(SatakeError::NotCentral(_))
    ));
}

#[test]
fn inversions() {
    let t = TransformTable::build(Preset::Gl2, &[vec![1, 0], vec![2, 0]]).unwrap();
    let f = (&e(&[1, 0]) + &e(&[0, 1])).scale(&L::q_half_pow(1));
    assert_eq!(satake_inverse(&f, &t).unwrap(), hc(&[(&[1, 0], L::one())]));
    let tc = TransformTable::build(Preset::Gl2, &[vec![2, 2]]).unwrap();
    assert_eq!(satake_inverse(&e(&[2, 2]), &tc).unwrap(), hc(&[(&[2, 2], L::one())]));
    let t = TransformTable::build(Preset::Gu4, &[vec![2, 2, 1]]).unwrap();
    let f = orbit_sum(t.datum(), &[2, 2, 1]);
    let inv = satake_inverse(&f, &t).unwrap();
    let expected = hc(&[
        (&[2, 2, 1], L::q_pow(-3)),
        (&[2, 1, 1], -&(&L::q_pow(-3) * &(&poly(&[-1, 1]) * &poly(&[1, 0, 1])))),
    ]);
    assert_eq!(inv, expected);
    assert_eq!(t.transform(&inv).unwrap(), f);
    assert!(matches!(
        satake_inverse(&e(&[2, 1, 0]), &t),
        Err(SatakeError::NotInvariant(_))
    ));
}

#[test]
fn minuscule_polynomials() {
    let gl4 = Preset::Gln(4).datum();
    let s = minuscule_satake_poly(&gl4, &[1, 1, 0, 0, 0]).unwrap();
    let factors: Vec<Vec<i64>> = (1..=4)
        .map(|i| {
            let mut v = vec![1, 0, 0, 0, 0];
            v[i] = 1;
            v
        })
        .collect();
    assert_eq!(s, satake_poly_from_monomials(5, &factors));
    let gsp4 = Preset::Gsp4.datum();
    let s = minuscule_satake_poly(&gsp4, &[1, 1, 1]).unwrap();
    let spin = satake_poly_from_monomials(3, &[vec![1, 0, 0], vec![1, 1, 0], vec![1, 0, 1], vec![1, 1, 1]]);
    assert_eq!(s, spin);
    assert_eq!(
        s.coeff(2),
        &orbit_sum(&gsp4, &[2, 2, 1]) + &orbit_sum(&gsp4, &[2, 1, 1]).scale(&L::constant(2))
    );
    let gl2 = Preset::Gl2.datum();
    let c = minuscule_satake_poly(&gl2, &[1, 1]).unwrap();
    assert_eq!(c, XPolynomial::new(vec![OrbitPolynomial::one(2), -e(&[1, 1])]));
    assert!(matches!(
        minuscule_satake_poly(&gl2, &[2, 0]),
        Err(SatakeError::NotMinuscule(_))
    ));
}

#[test]
fn standard_hecke_polynomials() {
    for n in [2usize, 4, 6] {
        for c in [1i64, 3] {
            let d = Preset::Gln(n).datum();
            let mut mu = vec![0i64; n + 1];
            mu[0] = 1;
            mu[1] = 1;
            let s = minuscule_satake_poly(&d, &mu).unwrap();
            let budget = satake::required_budget(&d, &s);
            let t = TransformTable::build(Preset::Gln(n), &budget).unwrap();
            let h = hecke_polynomial(&s, c, &t).unwrap();
            assert_eq!(h.degree(), Some(n));
            for k in 0..=n {
                let mut lam = vec![0i64; n + 1];
                lam[0] = k as i64;
                for x in lam.iter_mut().skip(1).take(k) {
                    *x = 1;
                }
                let k = k as i64;
                let sign = if k % 2 == 0 { 1 } else { -1 };
                let coeff = L::monomial(-k * (n as i64 - k + c), sign);
                assert_eq!(h.coeff(k as usize), hc(&[(&lam, coeff)]), "n = {n}, c = {c}, k = {k}");
            }
        }
    }
}

#[test]
fn spinor_hecke_polynomial() {
    let d = Preset::Gsp4.datum();
    let s = minuscule_satake_poly(&d, &[1, 1, 1]).unwrap();
    let t = TransformTable::build(Preset::Gsp4, &satake::required_budget(&d, &s)).unwrap();
    for c in [1i64, 3] {
        let h = hecke_polynomial(&s, c, &t).unwrap();
        assert_eq!(h.coeff(0), hc(&[(&[0, 0, 0], L::one())]));
        assert_eq!(h.coeff(1), hc(&[(&[1, 1, 1], L::monomial(-(c + 3), -1))]));
        let q2 = L::monomial(-2 * (c + 2), 1);
        assert_eq!(
            h.coeff(2),
            hc(&[(&[2, 2, 1], q2.clone()), (&[2, 1, 1], &q2 * &poly(&[1, 0, 1]))])
        );
        assert_eq!(h.coeff(3), hc(&[(&[3, 2, 2], L::monomial(-(3 * c + 3), -1))]));
        assert_eq!(h.coeff(4), hc(&[(&[4, 2, 2], L::monomial(-4 * c, 1))]));
    }
}

#[test]
fn unitary_hecke_polynomial() {
    let monomials = vec![vec![2, 2, 1], vec![2, 0, 1], vec![2, 1, 2], vec![2, 1, 0]];
    let s = satake_poly_from_monomials(3, &monomials);
    let d = Preset::Gu4.datum();
    let t = TransformTable::build(Preset::Gu4, &satake::required_budget(&d, &s)).unwrap();
    let one_minus_q = poly(&[1, -1]);
    let q2p1 = poly(&[1, 0, 1]);
    for c in [1i64, 3] {
        let h = hecke_polynomial(&s, 2 * c, &t).unwrap();
        let a = L::monomial(-2 * (c + 3), -1);
        assert_eq!(
            h.coeff(1),
            hc(&[(&[2, 2, 1], a.clone()), (&[2, 1, 1], &a * &(&q2p1 * &one_minus_q))])
        );
        let b = L::q_pow(-(2 * c + 4));
        assert_eq!(
            h.coeff(2),
            hc(&[
                (&[4, 3, 3], b.clone()),
                (&[4, 3, 2], &b * &one_minus_q),
                (&[4, 2, 2], &b * &(&q2p1 * &poly(&[1, -1, 1]))),
            ])
        );
        let c3 = L::monomial(-2 * (3 * c + 3), -1);
        assert_eq!(
            h.coeff(3),
            hc(&[(&[6, 4, 3], c3.clone()), (&[6, 3, 3], &c3 * &(&q2p1 * &one_minus_q))])
        );
        assert_eq!(h.coeff(4), hc(&[(&[8, 4, 4], L::q_pow(-4 * c))]));
        // Forward check: the transform of each coefficient reproduces 𝔖(q^{−c}X).
        for k in 0..=4 {
            let fwd = t.transform(&h.coeff(k)).unwrap();
            assert_eq!(fwd, s.coeff(k).scale(&L::q_pow(-(k as i64) * c)));
        }
    }
}

#[test]
fn transposition() {
    let d = Preset::Gsp4.datum();
    let h = hc(&[(&[1, 1, 1], L::one())]);
    let tr = transpose(&d, &h).unwrap();
    assert_eq!(tr, hc(&[(&[-1, 0, 0], L::one())]));
    assert_eq!(transpose(&d, &tr).unwrap(), h);
    let central = hc(&[(&[2, 1, 1], L::one())]);
    assert_eq!(transpose(&d, &central).unwrap(), hc(&[(&[-2, -1, -1], L::one())]));
    let t = TransformTable::build(Preset::Gsp4, &[vec![1, 1, 1], vec![-1, 0, 0]]).unwrap();
    let neg = t.transform(&h).unwrap().map_lattice(|l| l.iter().map(|x| -x).collect());
    assert_eq!(t.transform(&tr).unwrap(), neg);
    assert!(matches!(
        transpose(&Preset::Gln(3).datum(), &h),
        Err(SatakeError::OppositionNotMinusOne(_))
    ));
}

#[test]
fn reduction_mod_q() {
    let t = TransformTable::build(Preset::Gl2, &[vec![2, 0]]).unwrap();
    let f = orbit_sum(t.datum(), &[2, 0]);
    let xi = satake_inverse(&f, &t).unwrap();
    assert!(modq_check(&f, &xi, &t).unwrap());
    let lead = orbit_sum(t.datum(), &[2, 0]).scale(&L::q());
    assert!(modq_check(&lead, &hc(&[(&[2, 0], L::one())]), &t).unwrap());
    let t = TransformTable::build(Preset::Gsp4, &[vec![2, 2, 1]]).unwrap();
    let f = orbit_sum(t.datum(), &[2, 2, 1]);
    assert!(modq_check(&f, &hc(&[(&[2, 2, 1], L::one())]), &t).unwrap());
}
