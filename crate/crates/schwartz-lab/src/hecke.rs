//! Covariant Hecke actions on the finite model.
//!
//! Functions are acted on by `(h·ξ)(x) = ξ(x·h)` with `(u⃗, v⃗)·(h₁, h₂) = (h₁^{−1}u⃗, h₂^{−1}v⃗)`.
//! The covariant action of a double coset is `[UσU]_* ξ = Σ_{α ∈ Uσ^{−1}U/U} α·ξ`; with
//! `β = α^{−1}` running over `U\UσU` this is `ξ ↦ Σ_β ξ(β₁u⃗, β₂v⃗)`. For `U = H ∩ K` the
//! double coset of `ϖ^λ` splits as a product over the two `GL₂` factors with
//! `t₁ = diag(ϖ^{a₁}, ϖ^{a₀−a₁})` and `t₂ = diag(ϖ^{a₂}, ϖ^{a₀−a₂})`. Right cosets of
//! `GL₂(O) t GL₂(O)` are the transposes of its left cosets, which come from
//! [`padic_models::enumerate_cells`].

use padic_models::{enumerate_cells, LocalMatrix, ModelPreset};
use root_datum::Preset;

use crate::error::SchwartzError;
use crate::space::{FiniteSchwartz, Level};

/// A `2 × 2` integral matrix reduced mod `p^{M+N}`.
pub type IntMatrix = [[i64; 2]; 2];

/// A pair of integral matrices acting by `(u⃗, v⃗) ↦ (A₁u⃗, A₂v⃗)`.
pub type IntPair = (IntMatrix, IntMatrix);

/// The antidiagonal `s = [[0, 1], [1, 0]]` conjugate `sAs`.
pub fn swap_conjugate(a: &IntMatrix) -> IntMatrix {
    [[a[1][1], a[1][0]], [a[0][1], a[0][0]]]
}

/// Reduces an integral rational `2 × 2` matrix mod `modulus`.
pub fn to_int_matrix(g: &LocalMatrix, modulus: i64) -> Result<IntMatrix, SchwartzError> {
    if g.dim() != 2 || !g.is_rational() {
        return Err(SchwartzError::Unsupported(format!("not a rational 2 × 2 matrix: {g}")));
    }
    let p = g.prime() as i128;
    let mut out = [[0i64; 2]; 2];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            let (mut a, _, mut e) = g.get(i, j).parts();
            while e < 0 && a != 0 && a % p == 0 {
                a /= p;
                e += 1;
            }
            if a != 0 && e < 0 {
                return Err(SchwartzError::Unsupported(format!("non-integral matrix {g}")));
            }
            let mut v = a.rem_euclid(modulus as i128);
            for _ in 0..e.max(0) {
                v = (v * p).rem_euclid(modulus as i128);
            }
            *slot = v as i64;
        }
    }
    Ok(out)
}

/// Representatives of `GL₂(O)\GL₂(O)·diag(ϖ^a, ϖ^b)·GL₂(O)` for `a, b ≥ 0`.
pub fn right_coset_reps(p: u32, exps: [i64; 2]) -> Result<Vec<LocalMatrix>, SchwartzError> {
    if exps.iter().any(|&e| e < 0) {
        return Err(SchwartzError::Unsupported(format!(
            "double coset of diag(ϖ^{}, ϖ^{}) is not integral",
            exps[0], exps[1]
        )));
    }
    let model = ModelPreset::new(Preset::Gl2, p)?;
    let dominant = vec![exps[0].max(exps[1]), exps[0].min(exps[1])];
    let enumeration = enumerate_cells(&model, &dominant)?;
    Ok(enumeration.cosets.iter().map(|c| c.matrix.transpose()).collect())
}

/// `ξ ↦ Σ_β ξ(β₁u⃗, β₂v⃗)`.
pub fn pushforward(f: &FiniteSchwartz, pairs: &[IntPair]) -> FiniteSchwartz {
    let level = f.level();
    let mut out = vec![0i64; level.num_points()];
    for (a1, a2) in pairs {
        for (i, slot) in out.iter_mut().enumerate() {
            *slot += f.get(level.apply(i, a1, a2));
        }
    }
    FiniteSchwartz::from_values(level, out).expect("same level")
}

/// Checks that a pushforward through double cosets with largest exponent `spread`
/// stays inside the finite model.
fn check_room(f: &FiniteSchwartz, spread: i64) -> Result<(), SchwartzError> {
    let level = f.level();
    match f.support_valuation() {
        Some(s) if s - spread < -(level.lower() as i64) => Err(SchwartzError::LevelTooSmall {
            m: level.lower(),
            n: level.upper(),
            reason: format!("output support reaches valuation {} < −M", s - spread),
        }),
        _ => Ok(()),
    }
}

fn reps_mod(level: Level, exps: [i64; 2]) -> Result<Vec<IntMatrix>, SchwartzError> {
    right_coset_reps(level.prime(), exps)?
        .iter()
        .map(|g| to_int_matrix(g, level.modulus()))
        .collect()
}

/// The covariant action `[Uϖ^λU]_*` for `λ = (a₀, a₁, a₂)` with `0 ≤ a₁, a₂ ≤ a₀`.
pub fn hecke_act(lambda: &[i64], f: &FiniteSchwartz) -> Result<FiniteSchwartz, SchwartzError> {
    let [a0, a1, a2]: [i64; 3] = lambda
        .try_into()
        .map_err(|_| SchwartzError::Unsupported(format!("λ = {lambda:?} is not (a₀, a₁, a₂)")))?;
    let e1 = [a1, a0 - a1];
    let e2 = [a2, a0 - a2];
    let spread = e1.iter().chain(&e2).copied().max().unwrap_or(0);
    check_room(f, spread)?;
    let level = f.level();
    let r1 = reps_mod(level, e1)?;
    let r2 = reps_mod(level, e2)?;
    let pairs: Vec<IntPair> = r1.iter().flat_map(|b1| r2.iter().map(move |b2| (*b1, *b2))).collect();
    Ok(pushforward(f, &pairs))
}

/// The covariant action of `U·ȷ(h)·H_{τ₁}` with `h = diag(ϖ^a, ϖ^b)`, `ȷ(h) = (h, shs)`.
///
/// The cosets of `U ȷ(h) H_{τ₁}` correspond to those of `GL₂(O) h GL₂(O)`, so the action
/// is `ξ ↦ Σ_β ξ(βu⃗, sβs·v⃗)` over right cosets `β` of `GL₂(O) h GL₂(O)`.
pub fn j_pushforward(exps: [i64; 2], f: &FiniteSchwartz) -> Result<FiniteSchwartz, SchwartzError> {
    check_room(f, exps[0].max(exps[1]))?;
    let pairs: Vec<IntPair> = reps_mod(f.level(), exps)?
        .into_iter()
        .map(|b| (b, swap_conjugate(&b)))
        .collect();
    Ok(pushforward(f, &pairs))
}

/// `𝔥′₁,*(ξ) = q·(UH_{τ₁})_*ξ − (Uϖ^{(1,1,0)}H_{τ₁})_*ξ + (Uϖ^{(2,1,1)}H_{τ₁})_*ξ` at `q = p`.
pub fn frakh1(f: &FiniteSchwartz) -> Result<FiniteSchwartz, SchwartzError> {
    let level = f.level();
    if level.lower() < 1 {
        return Err(SchwartzError::LevelTooSmall {
            m: level.lower(),
            n: level.upper(),
            reason: "𝔥′₁ needs M ≥ 1".into(),
        });
    }
    let t = j_pushforward([1, 0], f)?;
    let s = j_pushforward([1, 1], f)?;
    f.scale(level.prime() as i64).add_scaled(&t, -1)?.add_scaled(&s, 1)
}

/// `ψ`, the function whose image under `ı` is the characteristic function of
/// `diag(ϖ, ϖ)^{−1}·GL₂(O)`: all entries in `ϖ^{−1}O` and `det ∈ ϖ^{−2}O^×`.
pub fn psi(level: Level) -> Result<FiniteSchwartz, SchwartzError> {
    if level.lower() < 1 {
        return Err(SchwartzError::LevelTooSmall {
            m: level.lower(),
            n: level.upper(),
            reason: "ψ is supported outside O⁴; needs M ≥ 1".into(),
        });
    }
    let p = level.prime() as i64;
    let scale = p.pow(level.lower() - 1);
    Ok(FiniteSchwartz::from_fn(level, |i| {
        let m = level.imath(i);
        if m.iter().flatten().any(|&a| a % scale != 0) {
            return 0;
        }
        let n: Vec<i64> = m.iter().flatten().map(|&a| (a / scale) % p).collect();
        ((n[0] * n[3] - n[1] * n[2]).rem_euclid(p) != 0) as i64
    }))
}

/// The closed forms of `[Uϖ^λU]_*φ` for `λ ∈ {(1,1,1), (2,2,1), (2,1,2)}` at `q = p`,
/// as combinations of `φ̄_{(u,v,w,x)} = box(−u, −v, −w, −x)`:
///
/// * `(1,1,1)`: `φ̄_{(1,1,1,1)} + q(φ̄_{(1,1,0,0)} + φ̄_{(0,0,1,1)}) + q²φ`
/// * `(2,2,1)`: `φ̄_{(2,2,1,1)} + (q−1)φ̄_{(1,1,1,1)} + q²φ̄_{(0,0,1,1)}`
/// * `(2,1,2)`: `φ̄_{(1,1,2,2)} + (q−1)φ̄_{(1,1,1,1)} + q²φ̄_{(1,1,0,0)}`
pub fn explicit_hecke_image(lambda: &[i64], level: Level) -> Result<FiniteSchwartz, SchwartzError> {
    let q = level.prime() as i64;
    let terms: Vec<(i64, [i64; 4])> = match lambda {
        [1, 1, 1] => vec![
            (1, [1, 1, 1, 1]),
            (q, [1, 1, 0, 0]),
            (q, [0, 0, 1, 1]),
            (q * q, [0, 0, 0, 0]),
        ],
        [2, 2, 1] => vec![(1, [2, 2, 1, 1]), (q - 1, [1, 1, 1, 1]), (q * q, [0, 0, 1, 1])],
        [2, 1, 2] => vec![(1, [1, 1, 2, 2]), (q - 1, [1, 1, 1, 1]), (q * q, [1, 1, 0, 0])],
        _ => return Err(SchwartzError::Unsupported(format!("no closed form for λ = {lambda:?}"))),
    };
    terms.iter().try_fold(FiniteSchwartz::zero(level), |acc, (c, e)| {
        acc.add_scaled(&FiniteSchwartz::box_fn(level, [-e[0], -e[1], -e[2], -e[3]])?, *c)
    })
}
