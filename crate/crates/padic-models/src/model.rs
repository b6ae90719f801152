//! Concrete models of the case-study groups at a prime `p`.
//!
//! * `gl2`: `GL_2(F)`; `gln{n}`: `G_m × GL_n(F)`, the `G_m` factor tracked by valuation.
//! * `gsp4`: `GSp_4(F)` for `J₄ = [[0, 1₂], [−1₂, 0]]`, i.e. `ᵗg J₄ g = sim(g) J₄`.
//! * `gu4`: `GU_4` over the unramified extension `E = F(ξ)`, `ξ² = −1`, for the Hermitian
//!   form `J = [[0, 1₂], [1₂, 0]]`, i.e. `γ(ᵗg) J g = sim(g) J`.
//!
//! The torus element of `(a₀, a₁, a₂)` in the rank-three models is
//! `diag(ϖ^{a₁}, ϖ^{a₂}, ϖ^{a₀−a₁}, ϖ^{a₀−a₂})`. Label `0` is the affine generator.

use coset_decomposer::MixedClass;
use root_datum::{Preset, RootDatum};

use crate::error::PadicError;
use crate::lattice::{coset_key, elementary_divisors, hermite, primitive_shift, CosetKey};
use crate::matrix::LocalMatrix;
use crate::residue::{Res, ResMatrix, Ring};
use crate::scalar::LocalScalar;

/// A generator of `U = H ∩ K` reduced modulo `p^M`, with its `ν`-value.
#[derive(Clone, Debug)]
pub struct UGenerator {
    /// Human-readable name.
    pub name: String,
    /// The matrix.
    pub matrix: ResMatrix,
    /// `ν` of the element.
    pub nu: Res,
}

/// A group model at a fixed prime.
#[derive(Clone, Debug)]
pub struct ModelPreset {
    preset: Preset,
    p: u32,
    ring: Ring,
    datum: RootDatum,
}

fn s(p: u32, c: i64, e: i32) -> LocalScalar {
    LocalScalar::int(p, c).shift(e)
}

impl ModelPreset {
    /// The model of `preset` at `p`. The unitary model needs `p ≡ 3 (mod 4)` so that
    /// `ξ = √−1` generates the unramified quadratic extension.
    pub fn new(preset: Preset, p: u32) -> Result<Self, PadicError> {
        if !(2..=97).contains(&p) || (2..p).any(|d| p % d == 0) {
            return Err(PadicError::Unsupported(format!("{p} is not a small prime")));
        }
        if preset == Preset::Gu4 && p % 4 != 3 {
            return Err(PadicError::Unsupported(format!(
                "the unitary model needs p ≡ 3 mod 4, got {p}"
            )));
        }
        if matches!(preset, Preset::Gln(n) if n < 2) {
            return Err(PadicError::Unsupported("G_m × GL_n needs n ≥ 2".into()));
        }
        Ok(Self {
            preset,
            p,
            ring: Ring::new(p),
            datum: preset.datum(),
        })
    }

    /// The preset.
    pub fn preset(&self) -> Preset {
        self.preset
    }

    /// The prime.
    pub fn prime(&self) -> u32 {
        self.p
    }

    /// The truncated coefficient ring.
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// The root datum.
    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    /// Matrix size of the ambient `GL`.
    pub fn dim(&self) -> usize {
        match self.preset {
            Preset::Gl2 => 2,
            Preset::Gln(n) => n,
            Preset::Gsp4 | Preset::Gu4 => 4,
        }
    }

    /// Number of affine generators `w₀, …, w_r`.
    pub fn num_generators(&self) -> usize {
        match self.preset {
            Preset::Gl2 => 2,
            Preset::Gln(n) => n,
            Preset::Gsp4 | Preset::Gu4 => 3,
        }
    }

    fn check_label(&self, i: usize) -> Result<(), PadicError> {
        if i < self.num_generators() {
            Ok(())
        } else {
            Err(PadicError::Unsupported(format!("no generator w{i} in {}", self.preset)))
        }
    }

    fn from_rows(&self, rows: &[Vec<(i64, i32)>]) -> LocalMatrix {
        LocalMatrix::from_int_rows(self.p, rows)
    }

    /// The Weyl lift `w_i`.
    pub fn w(&self, i: usize) -> Result<LocalMatrix, PadicError> {
        self.check_label(i)?;
        let p = self.p;
        let o = (0, 0);
        let one = (1, 0);
        Ok(match self.preset {
            Preset::Gl2 | Preset::Gln(_) => {
                let n = self.dim();
                let mut m = LocalMatrix::identity(p, n);
                let (a, b) = if i == 0 { (0, n - 1) } else { (i - 1, i) };
                m.set(a, a, LocalScalar::zero(p));
                m.set(b, b, LocalScalar::zero(p));
                if i == 0 {
                    m.set(a, b, s(p, 1, -1));
                    m.set(b, a, s(p, 1, 1));
                } else {
                    m.set(a, b, LocalScalar::one(p));
                    m.set(b, a, LocalScalar::one(p));
                }
                m
            }
            Preset::Gsp4 | Preset::Gu4 => {
                let sign = if self.preset == Preset::Gsp4 { -1 } else { 1 };
                match i {
                    0 => self.from_rows(&[
                        vec![o, o, (1, -1), o],
                        vec![o, one, o, o],
                        vec![(1, 1), o, o, o],
                        vec![o, o, o, (sign, 0)],
                    ]),
                    1 => self.from_rows(&[
                        vec![o, one, o, o],
                        vec![one, o, o, o],
                        vec![o, o, o, one],
                        vec![o, o, one, o],
                    ]),
                    _ => self.from_rows(&[
                        vec![one, o, o, o],
                        vec![o, o, o, one],
                        vec![o, o, (sign, 0), o],
                        vec![o, one, o, o],
                    ]),
                }
            }
        })
    }

    /// The root-group element `x_i(u)`.
    pub fn x(&self, i: usize, u: LocalScalar) -> Result<LocalMatrix, PadicError> {
        self.check_label(i)?;
        let p = self.p;
        let xi = LocalScalar::ext(p, 0, 1);
        let pi = LocalScalar::pi_pow(p, 1);
        let n = self.dim();
        let mut m = LocalMatrix::identity(p, n);
        match self.preset {
            Preset::Gl2 | Preset::Gln(_) => {
                if i == 0 {
                    m.set(n - 1, 0, pi * u);
                } else {
                    m.set(i - 1, i, u);
                }
            }
            Preset::Gsp4 => match i {
                0 => m.set(2, 0, pi * u),
                1 => {
                    m.set(0, 1, u);
                    m.set(3, 2, -u);
                }
                _ => m.set(1, 3, u),
            },
            Preset::Gu4 => match i {
                0 => m.set(2, 0, pi * xi * u),
                1 => {
                    m.set(0, 1, u);
                    m.set(3, 2, -u.conj());
                }
                _ => m.set(1, 3, xi * u),
            },
        }
        Ok(m)
    }

    /// Residue representatives parametrizing the root group of `w_i`: `[𝓀]`, or `[𝓀_E]`
    /// (`p²` elements `a + bξ`) for the unitary `w₁`.
    pub fn residues(&self, i: usize) -> Vec<LocalScalar> {
        let p = self.p as i64;
        if self.preset == Preset::Gu4 && i == 1 {
            (0..p)
                .flat_map(|a| (0..p).map(move |b| (a, b)))
                .map(|(a, b)| LocalScalar::ext(self.p, a, b))
                .collect()
        } else {
            (0..p).map(|a| LocalScalar::int(self.p, a)).collect()
        }
    }

    /// `g_i(κ) = x_i(κ) w_i`.
    pub fn g(&self, i: usize, kappa: LocalScalar) -> Result<LocalMatrix, PadicError> {
        Ok(self.x(i, kappa)?.mul(&self.w(i)?))
    }

    /// The length-zero generator `ρ`.
    pub fn rho(&self) -> LocalMatrix {
        let p = self.p;
        match self.preset {
            Preset::Gl2 | Preset::Gln(_) => {
                let n = self.dim();
                let mut m = LocalMatrix::zero(p, n);
                for i in 0..(n - 1) {
                    m.set(i, i + 1, LocalScalar::one(p));
                }
                m.set(n - 1, 0, LocalScalar::pi_pow(p, 1));
                m
            }
            Preset::Gsp4 | Preset::Gu4 => {
                let (o, one, pi) = ((0, 0), (1, 0), (1, 1));
                self.from_rows(&[
                    vec![o, o, o, one],
                    vec![o, o, one, o],
                    vec![o, pi, o, o],
                    vec![pi, o, o, o],
                ])
            }
        }
    }

    /// The torus element `ϖ^λ`.
    pub fn torus(&self, lambda: &[i64]) -> Result<LocalMatrix, PadicError> {
        if lambda.len() != self.preset.rank() {
            return Err(PadicError::Unsupported(format!(
                "{} needs a cocharacter of rank {}",
                self.preset,
                self.preset.rank()
            )));
        }
        Ok(match self.preset {
            Preset::Gl2 => LocalMatrix::pi_diag(self.p, lambda),
            Preset::Gln(_) => LocalMatrix::pi_diag(self.p, &lambda[1..]).with_gm(lambda[0]),
            Preset::Gsp4 | Preset::Gu4 => {
                let (a0, a1, a2) = (lambda[0], lambda[1], lambda[2]);
                LocalMatrix::pi_diag(self.p, &[a1, a2, a0 - a1, a0 - a2])
            }
        })
    }

    /// The similitude of `g` if it satisfies the group condition (`GL` models: `Some(1)`
    /// for every non-singular matrix).
    pub fn similitude(&self, g: &LocalMatrix) -> Option<LocalScalar> {
        let p = self.p;
        match self.preset {
            Preset::Gl2 | Preset::Gln(_) => primitive_shift(g)
                .ok()
                .and_then(|_| elementary_divisors(&self.ring, g).ok().map(|_| LocalScalar::one(p))),
            Preset::Gsp4 | Preset::Gu4 => {
                let (o, one) = ((0, 0), (1, 0));
                let sign = if self.preset == Preset::Gsp4 { -1 } else { 1 };
                let j = self.from_rows(&[
                    vec![o, o, one, o],
                    vec![o, o, o, one],
                    vec![(sign, 0), o, o, o],
                    vec![o, (sign, 0), o, o],
                ]);
                let lhs = g.transpose().conj().mul(&j).mul(g);
                let c = lhs.scalar_ratio(&j)?;
                (c.is_rational() && !c.is_zero()).then_some(c)
            }
        }
    }

    /// True when `g` lies in `K = G ∩ GL_n(O)`: integral, unit determinant, in the group.
    pub fn in_k(&self, g: &LocalMatrix) -> Result<bool, PadicError> {
        if g.gm != 0 || g.min_valuation().ok_or(PadicError::Singular)? < 0 {
            return Ok(false);
        }
        let ed = elementary_divisors(&self.ring, g)?;
        Ok(ed.iter().all(|&v| v == 0) && self.similitude(g).is_some())
    }

    /// Canonical key of `gK`.
    pub fn coset_key(&self, g: &LocalMatrix) -> Result<CosetKey, PadicError> {
        coset_key(&self.ring, g)
    }

    /// `gK = hK`.
    pub fn same_coset(&self, g: &LocalMatrix, h: &LocalMatrix) -> Result<bool, PadicError> {
        Ok(self.coset_key(g)? == self.coset_key(h)?)
    }

    /// The Iwasawa shape `μ` with `gK = ϖ^μ n K`, `n` upper unipotent in `G`.
    pub fn iwasawa_shape(&self, g: &LocalMatrix) -> Result<Vec<i64>, PadicError> {
        let g = match self.preset {
            Preset::Gsp4 | Preset::Gu4 => {
                // Reorder the basis as (e₁, e₂, e₄, e₃) so that the Borel is upper triangular.
                let perm = [0usize, 1, 3, 2];
                let mut h = g.clone();
                for i in 0..4 {
                    for j in 0..4 {
                        h.set(i, j, g.get(perm[i], perm[j]));
                    }
                }
                h
            }
            _ => g.clone(),
        };
        let sft = primitive_shift(&g)?;
        let (vals, _) = hermite(&self.ring, g.to_res(&self.ring, sft))?;
        let b: Vec<i64> = vals.iter().map(|&v| v as i64 - sft as i64).collect();
        match self.preset {
            Preset::Gl2 => Ok(b),
            Preset::Gln(_) => Ok(std::iter::once(g.gm).chain(b).collect()),
            Preset::Gsp4 | Preset::Gu4 => {
                let a0 = b[1] + b[2];
                if b[0] + b[3] != a0 {
                    return Err(PadicError::EmbeddingMismatch(b));
                }
                Ok(vec![a0, b[0], b[1]])
            }
        }
    }

    /// The dominant `λ` with `g ∈ Kϖ^λK`.
    pub fn cartan_type(&self, g: &LocalMatrix) -> Result<Vec<i64>, PadicError> {
        let v = elementary_divisors(&self.ring, g)?;
        let lambda = match self.preset {
            Preset::Gl2 => v,
            Preset::Gln(_) => std::iter::once(g.gm).chain(v).collect(),
            Preset::Gsp4 | Preset::Gu4 => {
                let a0 = v[0] + v[3];
                if v[1] + v[2] != a0 {
                    return Err(PadicError::EmbeddingMismatch(v));
                }
                vec![a0, v[0], v[1]]
            }
        };
        if !self.datum.is_dominant(&lambda) {
            return Err(PadicError::EmbeddingMismatch(lambda));
        }
        Ok(lambda)
    }

    /// The fixed matrices `τ_i` of the mixed decompositions. For `G_m × GL_{2m}`,
    /// `τ_i = [[1_m, t_i], [0, 1_m]]` with `t_i = diag(ϖ^{−1} (i times), 0, …)`.
    pub fn tau(&self, i: usize) -> Result<LocalMatrix, PadicError> {
        let p = self.p;
        let (o, one, pi, pi2) = ((0, 0), (1, 0), (1, 1), (1, 2));
        let m1 = (-1, 0);
        let bad = || PadicError::Unsupported(format!("no τ{i} in {}", self.preset));
        match (self.preset, i) {
            (_, 0) if self.preset != Preset::Gl2 => Ok(LocalMatrix::identity(p, self.dim())),
            (Preset::Gln(n), _) if n % 2 == 0 && i <= n / 2 => {
                let m = n / 2;
                let mut t = LocalMatrix::identity(p, n);
                for k in 0..i {
                    t.set(k, m + k, LocalScalar::pi_pow(p, -1));
                }
                Ok(t)
            }
            (Preset::Gsp4, 1) => Ok(self.from_rows(&[
                vec![pi, o, o, one],
                vec![o, pi, one, o],
                vec![o, o, one, o],
                vec![o, o, o, one],
            ])),
            (Preset::Gu4, 1) | (Preset::Gu4, 2) => {
                let d = if i == 1 { pi } else { pi2 };
                Ok(self.from_rows(&[
                    vec![d, o, o, m1],
                    vec![o, d, one, o],
                    vec![o, o, one, o],
                    vec![o, o, o, one],
                ]))
            }
            (Preset::Gu4, 3) => Ok(self.from_rows(&[
                vec![pi2, pi, one, (-1, 1)],
                vec![o, pi, one, o],
                vec![o, o, one, o],
                vec![o, o, m1, pi],
            ])),
            _ => Err(bad()),
        }
    }

    /// The representative `ϖ^λ τ_i` of a mixed class.
    pub fn class_rep(&self, class: &MixedClass) -> Result<LocalMatrix, PadicError> {
        Ok(self.torus(&class.lambda)?.mul(&self.tau(class.tau_index)?))
    }

    fn unit_gens(&self, level: u32, ext: bool) -> Vec<Res> {
        let r = &self.ring;
        let p = self.p as i64;
        let mut out: Vec<Res> = (2..p).map(|a| r.elem(a, 0)).collect();
        for j in 1..=level.max(1) {
            out.push(r.add(r.one(), r.pi_pow(j)));
        }
        if ext {
            for a in 0..p {
                for b in 1..p {
                    out.push(r.elem(a, b));
                }
            }
            for j in 1..=level.max(1) {
                out.push(r.add(r.one(), r.mul(r.elem(0, 1), r.pi_pow(j))));
            }
        }
        out
    }

    fn elementary(&self, i: usize, j: usize, x: Res) -> ResMatrix {
        let mut m = self.ring.identity(self.dim());
        m[i][j] = x;
        m
    }

    fn diag(&self, d: &[Res]) -> ResMatrix {
        let mut m = self.ring.identity(self.dim());
        for (k, &x) in d.iter().enumerate() {
            m[k][k] = x;
        }
        m
    }

    /// Generators of `U = H ∩ K` for the block subgroup `H` (`G_m × GL_m × GL_m` in
    /// `G_m × GL_{2m}`, `GL₂ ×_det GL₂` in `GSp₄`, `GU₂ ×_μ GU₂` in `GU₄`): elementary
    /// root-group elements with parameters `ϖ^j` (`ξϖ^j` for the unitary blocks),
    /// `0 ≤ j ≤ level`, and torus units. Each comes with `ν(h) = det h₂ / det h₁`
    /// (the similitude for `GSp₄`).
    pub fn u_generators(&self, level: u32) -> Result<Vec<UGenerator>, PadicError> {
        let r = self.ring;
        let xi = r.elem(0, 1);
        let one = r.one();
        let mut out = Vec::new();
        let mut push = |name: String, matrix: ResMatrix, nu: Res| out.push(UGenerator { name, matrix, nu });
        match self.preset {
            Preset::Gln(n) if n % 2 == 0 => {
                let m = n / 2;
                for block in [0..m, m..n] {
                    for a in block.clone() {
                        for b in block.clone() {
                            if a != b {
                                for j in 0..=level {
                                    push(format!("e{a}{b}(p^{j})"), self.elementary(a, b, r.pi_pow(j)), one);
                                }
                            }
                        }
                    }
                }
                for k in 0..n {
                    for u in self.unit_gens(level, false) {
                        let mut d = vec![one; n];
                        d[k] = u;
                        let nu = if k < m { r.inv(u) } else { u };
                        push(format!("t{k}({})", u.a), self.diag(&d), nu);
                    }
                }
            }
            Preset::Gsp4 => {
                for (a, b) in [(0, 2), (2, 0), (1, 3), (3, 1)] {
                    for j in 0..=level {
                        push(format!("e{a}{b}(p^{j})"), self.elementary(a, b, r.pi_pow(j)), one);
                    }
                }
                for u in self.unit_gens(level, false) {
                    push(format!("t(u,1,1,u)[{}]", u.a), self.diag(&[u, one, one, u]), u);
                    push(format!("t(u,u,1,1)[{}]", u.a), self.diag(&[u, u, one, one]), u);
                    push(format!("t(1,1,u,u)[{}]", u.a), self.diag(&[one, one, u, u]), u);
                }
            }
            Preset::Gu4 => {
                for (a, b) in [(0, 2), (2, 0), (1, 3), (3, 1)] {
                    for j in 0..=level {
                        push(
                            format!("e{a}{b}(ξp^{j})"),
                            self.elementary(a, b, r.mul(xi, r.pi_pow(j))),
                            one,
                        );
                    }
                }
                for u in self.unit_gens(level, true) {
                    let ubar_inv = r.inv(r.conj(u));
                    let ratio = r.mul(u, ubar_inv);
                    let label = format!("({}+{}ξ)", u.a, u.b);
                    push(format!("h{label}"), self.diag(&[u, one, ubar_inv, one]), r.inv(ratio));
                    push(format!("h1{label}"), self.diag(&[one, u, one, ubar_inv]), ratio);
                }
                for u in self.unit_gens(level, false) {
                    push(format!("μ({})", u.a), self.diag(&[one, one, u, u]), one);
                }
            }
            other => return Err(PadicError::Unsupported(format!("no block subgroup H in {other}"))),
        }
        Ok(out)
    }
}
