//! Reference values for Weyl group enumeration, lengths, words and diagrams.

use exact_algebra::HalfPowerLaurent;
use root_datum::Preset;
use weyl_engine::{weak_order_diagram, AffineWeyl, ExtAffineElement, WeylGroup};

#[test]
fn group_orders() {
    assert_eq!(WeylGroup::new(&Preset::Gl2.datum()).order(), 2);
    assert_eq!(WeylGroup::new(&Preset::Gu4.datum()).order(), 8);
    assert_eq!(WeylGroup::new(&Preset::Gsp4.datum()).order(), 8);
    assert_eq!(WeylGroup::new(&Preset::Gln(4).datum()).order(), 24);
    let g = WeylGroup::new(&Preset::Gsp4.datum());
    let w0 = g.longest();
    assert_eq!(w0.length, 4);
    assert_eq!(weyl_engine::mat_mul(&w0.matrix, &w0.matrix), weyl_engine::identity(3));
}

#[test]
fn words_reproduce_matrices() {
    for p in [Preset::Gl2, Preset::Gln(4), Preset::Gsp4, Preset::Gu4] {
        let g = WeylGroup::new(&p.datum());
        for e in g.elements() {
            assert_eq!(e.word.len(), e.length);
            assert_eq!(g.word_matrix(&e.word), e.matrix);
        }
    }
}

#[test]
fn affine_lengths() {
    let gl2 = AffineWeyl::for_preset(Preset::Gl2);
    assert_eq!(gl2.length(&ExtAffineElement::identity(2)), 0);
    let u = gl2.min_in_right_coset(&[5, 0]);
    assert_eq!(gl2.length(&u), 4);
    assert_eq!(gl2.reduced_word(&u).to_string(), "w0w1w0w1ρ^-5");
    let k = gl2.min_rep_double(&[5, 0]).unwrap();
    assert_eq!(gl2.length(&k), 4);
    assert_eq!(gl2.reduced_word(&k).to_string(), "w0w1w0w1ρ^5");
    let gu4 = AffineWeyl::for_preset(Preset::Gu4);
    let u = gu4.min_rep_double(&[4, 3, 3]).unwrap();
    assert_eq!(gu4.length(&u), 3);
    assert_eq!(gu4.length(gu4.rho()), 0);
}

#[test]
fn minimal_representatives_match_hecke_operator_words() {
    let gsp4 = AffineWeyl::for_preset(Preset::Gsp4);
    let u = gsp4.min_rep_double(&[2, 2, 1]).unwrap();
    assert_eq!(gsp4.length(&u), 1);
    assert_eq!(gsp4.reduced_word(&u).to_string(), "w0ρ^2");
    let gu4 = AffineWeyl::for_preset(Preset::Gu4);
    let table = [
        ([2, 2, 1], "w0ρ^2"),
        ([2, 1, 1], "ρ^2"),
        ([4, 3, 3], "w0w1w0ρ^4"),
        ([4, 3, 2], "w0ρ^4"),
        ([4, 2, 2], "ρ^4"),
        ([6, 4, 3], "w0ρ^6"),
        ([6, 3, 3], "ρ^6"),
        ([8, 4, 4], "ρ^8"),
    ];
    for (lambda, word) in table {
        let u = gu4.min_rep_double(&lambda).unwrap();
        assert_eq!(gu4.reduced_word(&u).to_string(), word, "λ = {lambda:?}");
    }
    let central = gu4.min_rep_double(&[2, 1, 1]).unwrap();
    assert_eq!(gu4.length(&central), 0);
    let gsp4_rho = gsp4.min_rep_double(&[1, 1, 1]).unwrap();
    assert_eq!(gsp4.reduced_word(&gsp4_rho).to_string(), "ρ");
}

#[test]
fn parabolic_representatives() {
    let gu4 = AffineWeyl::for_preset(Preset::Gu4);
    let reps = gu4.parabolic_min_reps(&[1, 2], &[2]).unwrap();
    let lengths: Vec<usize> = reps.iter().map(|r| r.length).collect();
    assert_eq!(lengths, vec![0, 1, 2, 3]);
    assert_eq!(gu4.parabolic_min_reps(&[1, 2], &[1, 2]).unwrap().len(), 1);
    let gl4 = AffineWeyl::for_preset(Preset::Gln(4));
    assert_eq!(gl4.parabolic_min_reps(&[1, 2, 3], &[1, 3]).unwrap().len(), 6);
}

#[test]
fn poincare_polynomials() {
    let gu4 = AffineWeyl::for_preset(Preset::Gu4);
    assert_eq!(gu4.param_exps(), &[1, 2, 1]);
    let reps = gu4.parabolic_min_reps(&[1, 2], &[2]).unwrap();
    assert_eq!(
        gu4.poincare(&reps),
        HalfPowerLaurent::from_q_coeffs(&[1, 0, 1, 1, 0, 1])
    );
    let gsp4 = AffineWeyl::for_preset(Preset::Gsp4);
    let reps = gsp4.parabolic_min_reps(&[1, 2], &[2]).unwrap();
    assert_eq!(gsp4.poincare(&reps), HalfPowerLaurent::from_q_coeffs(&[1, 1, 1, 1]));
    let id = gsp4.parabolic_min_reps(&[1], &[1]).unwrap();
    assert_eq!(gsp4.poincare(&id), HalfPowerLaurent::one());
    let gl2 = AffineWeyl::for_preset(Preset::Gl2);
    let all = gl2.parabolic_min_reps(&[1], &[]).unwrap();
    assert_eq!(gl2.poincare(&all), HalfPowerLaurent::from_q_coeffs(&[1, 1]));
}

#[test]
fn orbit_diagrams() {
    let gsp4 = Preset::Gsp4.datum();
    let d = weak_order_diagram(&gsp4, &[2, 2, 1]).unwrap();
    let chain = d.chain().unwrap();
    let nodes: Vec<Vec<i64>> = chain.iter().map(|(n, _)| n.clone()).collect();
    let labels: Vec<usize> = chain.iter().map(|(_, l)| *l).take(3).collect();
    assert_eq!(nodes, vec![vec![2, 0, 1], vec![2, 1, 0], vec![2, 1, 2], vec![2, 2, 1]]);
    assert_eq!(labels, vec![1, 2, 1]);
    let gu4 = Preset::Gu4.datum();
    let chain = weak_order_diagram(&gu4, &[4, 3, 3]).unwrap().chain().unwrap();
    let nodes: Vec<Vec<i64>> = chain.iter().map(|(n, _)| n.clone()).collect();
    assert_eq!(nodes, vec![vec![4, 1, 1], vec![4, 1, 3], vec![4, 3, 1], vec![4, 3, 3]]);
    let gl2 = Preset::Gl2.datum();
    let d = weak_order_diagram(&gl2, &[1, 0]).unwrap();
    assert_eq!(d.edges, vec![(vec![0, 1], vec![1, 0], 1)]);
    assert!(d.to_dot().contains("\"(0,1)\" -> \"(1,0)\" [label=\"s1\"]"));
    let central = weak_order_diagram(&gl2, &[1, 1]).unwrap();
    assert_eq!(central.nodes.len(), 1);
    assert!(central.edges.is_empty());
}

#[test]
fn omega_conjugation() {
    for n in [2usize, 3, 4, 6] {
        let g = AffineWeyl::for_preset(Preset::Gln(n));
        for i in 0..n {
            let expected = if i == 0 { n - 1 } else { i - 1 };
            assert_eq!(g.omega_conjugate(g.rho(), i).unwrap(), expected, "n = {n}, i = {i}");
        }
    }
    let gsp4 = AffineWeyl::for_preset(Preset::Gsp4);
    assert_eq!(gsp4.omega_conjugate(gsp4.rho(), 0).unwrap(), 2);
    assert_eq!(gsp4.omega_conjugate(gsp4.rho(), 2).unwrap(), 0);
    assert_eq!(gsp4.omega_conjugate(gsp4.rho(), 1).unwrap(), 1);
    let id = ExtAffineElement::identity(3);
    for i in 0..3 {
        assert_eq!(gsp4.omega_conjugate(&id, i).unwrap(), i);
    }
    let s1 = gsp4.generator(1).unwrap().clone();
    assert!(gsp4.omega_conjugate(&s1, 0).is_err());
}
