//! Built-in root data for the case studies.
//!
//! Coordinates:
//! * `gl2`: `(a₁, a₂)` for `diag(ϖ^{a₁}, ϖ^{a₂})` in `GL_2`.
//! * `gln`: `(a₀, a₁, …, a_n)` for `G_m × GL_n`, the first coordinate being the
//!   similitude-free `G_m` factor `f₀`.
//! * `gsp4`, `gu4`: `(a₀, a₁, a₂)` for the torus element
//!   `diag(ϖ^{a₁}, ϖ^{a₂}, ϖ^{a₀−a₁}, ϖ^{a₀−a₂})`, where `a₀` is the valuation of
//!   the similitude.

use std::fmt;
use std::str::FromStr;

use crate::datum::{RootDatum, RootDatumConfig};
use crate::error::RootDatumError;

/// A named built-in root datum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Preset {
    /// `GL_2` with cocharacters `(a₁, a₂)`.
    Gl2,
    /// `G_m × GL_n` with cocharacters `(a₀, a₁, …, a_n)`.
    Gln(usize),
    /// `GSp_4` (split, type `C₂`).
    Gsp4,
    /// The unramified quasi-split `GU_4` (relative type `C₂`).
    Gu4,
}

impl Preset {
    /// Builds the validated root datum.
    pub fn datum(self) -> RootDatum {
        RootDatum::new(self.config()).expect("built-in presets satisfy the root-datum axioms")
    }

    /// Short machine name.
    pub fn name(self) -> String {
        match self {
            Preset::Gl2 => "gl2".into(),
            Preset::Gln(n) => format!("gln{n}"),
            Preset::Gsp4 => "gsp4".into(),
            Preset::Gu4 => "gu4".into(),
        }
    }

    /// Whether every root subgroup is parametrized by the residue field itself.
    pub fn is_split(self) -> bool {
        !matches!(self, Preset::Gu4)
    }

    /// Whether the cocharacter coordinates carry a separate `G_m` factor `f₀`.
    pub fn has_gm_factor(self) -> bool {
        matches!(self, Preset::Gln(_))
    }

    /// Rank of the cocharacter lattice.
    pub fn rank(self) -> usize {
        match self {
            Preset::Gl2 => 2,
            Preset::Gln(n) => n + 1,
            Preset::Gsp4 | Preset::Gu4 => 3,
        }
    }

    fn config(self) -> RootDatumConfig {
        match self {
            Preset::Gl2 => RootDatumConfig {
                name: "GL2".into(),
                rank: 2,
                roots: vec![vec![1, -1], vec![-1, 1]],
                coroots: vec![vec![1, -1], vec![-1, 1]],
                simple: vec![0],
                params: None,
            },
            Preset::Gln(n) => gln_config(n),
            Preset::Gsp4 => c2_config("GSp4", None),
            Preset::Gu4 => c2_config("GU4", Some(2)),
        }
    }
}

fn gln_config(n: usize) -> RootDatumConfig {
    let mut roots = Vec::new();
    let mut simple = Vec::new();
    let unit = |i: usize| {
        let mut v = vec![0i64; n + 1];
        v[i] = 1;
        v
    };
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            let v: Vec<i64> = unit(i).iter().zip(unit(j)).map(|(a, b)| a - b).collect();
            if j == i + 1 {
                simple.push((i, roots.len()));
            }
            roots.push(v);
        }
    }
    simple.sort();
    RootDatumConfig {
        name: format!("Gm x GL{n}"),
        rank: n + 1,
        coroots: roots.clone(),
        roots,
        simple: simple.into_iter().map(|(_, k)| k).collect(),
        params: None,
    }
}

/// The relative `C₂` datum on `(a₀, a₁, a₂)`. `short_param` is the residue
/// degree of the short root groups (2 for the unitary group).
fn c2_config(name: &str, short_param: Option<u32>) -> RootDatumConfig {
    // α₁ = ε₁−ε₂ (short), α₂ = 2ε₂−ε₀ (long), ε₁+ε₂−ε₀ (short), α₀ = 2ε₁−ε₀ (long).
    let pos_roots = [vec![0, 1, -1], vec![-1, 0, 2], vec![-1, 1, 1], vec![-1, 2, 0]];
    let pos_coroots = [vec![0, 1, -1], vec![0, 0, 1], vec![0, 1, 1], vec![0, 1, 0]];
    let short = [true, false, true, false];
    let mut roots = Vec::new();
    let mut coroots = Vec::new();
    let mut params = Vec::new();
    for k in 0..4 {
        for sign in [1i64, -1] {
            roots.push(pos_roots[k].iter().map(|x| sign * x).collect());
            coroots.push(pos_coroots[k].iter().map(|x| sign * x).collect());
            params.push(if short[k] { short_param.unwrap_or(1) } else { 1 });
        }
    }
    RootDatumConfig {
        name: name.into(),
        rank: 3,
        roots,
        coroots,
        simple: vec![0, 2],
        params: short_param.map(|_| params),
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl FromStr for Preset {
    type Err = RootDatumError;

    /// Accepts `gl2`, `gl2-toy` (= `gln2`), `glN`/`glnN` for `N ≥ 3`, `gsp4`, `gu4`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_lowercase();
        match t.as_str() {
            "gl2" => return Ok(Preset::Gl2),
            "gl2-toy" | "gl2toy" => return Ok(Preset::Gln(2)),
            "gsp4" => return Ok(Preset::Gsp4),
            "gu4" => return Ok(Preset::Gu4),
            _ => {}
        }
        let digits = t.strip_prefix("gln").or_else(|| t.strip_prefix("gl"));
        match digits.and_then(|d| d.parse::<usize>().ok()) {
            Some(n) if n >= 2 => Ok(Preset::Gln(n)),
            _ => Err(RootDatumError::UnknownPreset(s.to_string())),
        }
    }
}
