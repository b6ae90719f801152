//! Structural properties: trace round trips, the criterion versus the construction,
//! the generators of `H_{τ₁}`, and invariance of every computed function.

use std::collections::HashSet;

use padic_models::LocalMatrix;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use schwartz_lab::{
    check_invariant, frakh1, h_tau1_generators, hecke_act, psi, to_int_matrix, trace_check, trace_preimage, trace_sum,
    Character, FiniteAction, FiniteSchwartz, IntMatrix, Level, TraceOutcome,
};

fn random_action(rng: &mut StdRng, points: usize, gens: usize, d: u64) -> FiniteAction {
    let perms = (0..gens)
        .map(|_| {
            let mut p: Vec<u32> = (0..points as u32).collect();
            for i in (1..points).rev() {
                p.swap(i, rng.gen_range(0..=i));
            }
            p
        })
        .collect();
    let chi = (0..gens).map(|_| rng.gen_range(0..d)).collect();
    FiniteAction::from_permutations(points, perms, chi, d).unwrap()
}

/// A random function constant on `V`-orbits.
fn random_v_invariant(rng: &mut StdRng, w: &FiniteAction) -> Vec<i64> {
    let mut f = vec![0i64; w.num_points()];
    let mut done = vec![false; w.num_points()];
    for x in 0..w.num_points() {
        if done[x] {
            continue;
        }
        let o = w.orbit(x);
        let g = o.stabilizer_gcd;
        let vals: Vec<i64> = (0..g).map(|_| rng.gen_range(-3..4)).collect();
        for (&y, &t) in o.points.iter().zip(&o.transversal) {
            f[y] = vals[(t % g) as usize];
            done[y] = true;
        }
    }
    f
}

/// A random `W`-invariant function with values in a small range.
fn random_w_invariant(rng: &mut StdRng, w: &FiniteAction) -> Vec<i64> {
    let mut f = vec![0i64; w.num_points()];
    let mut done = vec![false; w.num_points()];
    for x in 0..w.num_points() {
        if !done[x] {
            let v = rng.gen_range(0..7);
            for y in w.orbit(x).points {
                f[y] = v;
                done[y] = true;
            }
        }
    }
    f
}

#[test]
fn traces_of_invariant_functions_have_preimages() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..40 {
        let d = rng.gen_range(1..9);
        let (points, gens) = (rng.gen_range(1..13), rng.gen_range(1..3));
        let w = random_action(&mut rng, points, gens, d);
        let f = random_v_invariant(&mut rng, &w);
        let phi = trace_sum(&f, &w).unwrap();
        assert!(trace_check(&phi, &w).unwrap());
        match trace_preimage(&phi, &w).unwrap() {
            TraceOutcome::Preimage(pre) => assert_eq!(trace_sum(&pre, &w).unwrap(), phi),
            other => panic!("expected a preimage, got {other:?}"),
        }
    }
}

#[test]
fn criterion_agrees_with_the_construction() {
    let mut rng = StdRng::seed_from_u64(11);
    let mut seen = HashSet::new();
    for _ in 0..60 {
        let d = rng.gen_range(2..7);
        let (points, gens) = (rng.gen_range(1..10), rng.gen_range(1..3));
        let w = random_action(&mut rng, points, gens, d);
        let phi = random_w_invariant(&mut rng, &w);
        let ok = trace_check(&phi, &w).unwrap();
        let outcome = trace_preimage(&phi, &w).unwrap();
        seen.insert(ok);
        match outcome {
            TraceOutcome::Preimage(_) => assert!(ok),
            TraceOutcome::Witness(wit) => {
                assert!(!ok);
                assert_ne!(wit.value % wit.index as i64, 0);
            }
        }
    }
    assert_eq!(seen.len(), 2, "both outcomes should occur");
}

#[test]
fn geometric_round_trip() {
    let mut rng = StdRng::seed_from_u64(3);
    let level = Level::new(3, 1, 0).unwrap();
    let w = schwartz_lab::h_tau1_action(level).unwrap();
    let f = random_v_invariant(&mut rng, &w);
    let phi = trace_sum(&f, &w).unwrap();
    match trace_preimage(&phi, &w).unwrap() {
        TraceOutcome::Preimage(pre) => assert_eq!(trace_sum(&pre, &w).unwrap(), phi),
        other => panic!("expected a preimage, got {other:?}"),
    }
}

fn int(m: &LocalMatrix, modulus: i64) -> IntMatrix {
    to_int_matrix(m, modulus).unwrap()
}

#[test]
fn h_tau1_generators_satisfy_the_membership_conditions() {
    for p in [2u32, 3, 5] {
        let pi = p as i64;
        for (h1, h2) in h_tau1_generators(p) {
            let (a, b) = (int(&h1, pi * pi * pi), int(&h2, pi * pi * pi));
            let det = |m: &IntMatrix| (m[0][0] * m[1][1] - m[0][1] * m[1][0]).rem_euclid(pi * pi * pi);
            assert_eq!(det(&a), det(&b));
            assert_ne!(det(&a) % pi, 0);
            // a₁ − d₂, a₂ − d₁, b₁ − c₂, b₂ − c₁ ∈ ϖO.
            for (x, y) in [
                (a[0][0], b[1][1]),
                (b[0][0], a[1][1]),
                (a[0][1], b[1][0]),
                (b[0][1], a[1][0]),
            ] {
                assert_eq!((x - y).rem_euclid(pi), 0, "p = {p}");
            }
        }
    }
}

/// Order of the group generated by integral matrices mod `m`.
fn generated_order(gens: &[IntMatrix], m: i64) -> usize {
    let mul = |x: &IntMatrix, y: &IntMatrix| {
        let mut z = [[0i64; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                z[i][j] = (x[i][0] * y[0][j] + x[i][1] * y[1][j]).rem_euclid(m);
            }
        }
        z
    };
    let id = [[1, 0], [0, 1]];
    let mut seen = HashSet::from([id]);
    let mut stack = vec![id];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = mul(&x, g);
            if seen.insert(y) {
                stack.push(y);
            }
        }
    }
    seen.len()
}

#[test]
fn congruence_generators_generate_the_principal_congruence_subgroup() {
    for (p, l) in [(2u32, 5u32), (3, 3)] {
        let m = (p as i64).pow(l);
        let second: Vec<IntMatrix> = h_tau1_generators(p)
            .iter()
            .filter(|(h1, _)| int(h1, m) == [[1, 0], [0, 1]])
            .map(|(_, h2)| int(h2, m))
            .collect();
        assert_eq!(generated_order(&second, m), (p as usize).pow(3 * (l - 1)));
        let first: Vec<IntMatrix> = h_tau1_generators(p).iter().map(|(h1, _)| int(h1, m)).collect();
        let pz = p as usize;
        let gl2 = pz.pow(4 * (l - 1)) * (pz * pz - 1) * (pz * pz - pz);
        assert_eq!(generated_order(&first, m), gl2);
    }
}

/// Generators of `U = H ∩ K`: `SL₂(O)` in each factor and a common diagonal unit.
fn u_action(level: Level) -> FiniteAction {
    let p = level.prime();
    let m = |r: [[i64; 2]; 2]| {
        LocalMatrix::from_int_rows(
            p,
            &r.iter()
                .map(|row| row.iter().map(|&a| (a, 0)).collect())
                .collect::<Vec<_>>(),
        )
    };
    let one = m([[1, 0], [0, 1]]);
    let mut pairs = Vec::new();
    for g in [[[1, 1], [0, 1]], [[1, 0], [1, 1]]] {
        pairs.push((m(g), one.clone()));
        pairs.push((one.clone(), m(g)));
    }
    for u in 2..(p as i64 + 2) {
        if u % p as i64 != 0 {
            pairs.push((m([[u, 0], [0, 1]]), m([[1, 0], [0, u]])));
        }
    }
    FiniteAction::from_pairs(level, pairs, Character::Trivial).unwrap()
}

#[test]
fn computed_functions_are_invariant() {
    for p in [2u32, 3] {
        let level = Level::default_for(p, 2).unwrap();
        let u = u_action(level);
        let phi = FiniteSchwartz::box_fn(level, [0; 4]).unwrap();
        for lambda in [[1, 1, 1], [2, 2, 1], [2, 1, 2], [3, 2, 2], [4, 2, 2]] {
            check_invariant(hecke_act(&lambda, &phi).unwrap().values(), &u).unwrap();
        }
        let level1 = Level::default_for(p, 1).unwrap();
        let w = schwartz_lab::h_tau1_action(level1).unwrap();
        let phi1 = FiniteSchwartz::box_fn(level1, [0; 4]).unwrap();
        check_invariant(frakh1(&phi1).unwrap().values(), &w).unwrap();
        check_invariant(psi(level1).unwrap().values(), &u_action(level1)).unwrap_err();
    }
}
