//! Root data: pairings, reflections, the dominance order `⪰`, the half-sum
//! `δ`, the opposition involution and minuscule coweights, together with the
//! built-in presets for `GL_2`, `G_m × GL_n`, `GSp_4` and `GU_4`.

mod datum;
mod error;
mod half;
mod linalg;
mod presets;

pub use datum::{LatticeVector, RootDatum, RootDatumConfig};
pub use error::RootDatumError;
pub use half::HalfInt;
pub use linalg::solve_in_span;
pub use presets::Preset;
