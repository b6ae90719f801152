//! Exact concrete models of `GL_n`, `GSp₄` and `GU₄` at a small prime.
//!
//! * [`LocalScalar`] and [`LocalMatrix`]: exact arithmetic in `Z[1/p][ξ]`, `ξ² = −1`.
//! * [`ModelPreset`]: the generator matrices `w_i`, `ρ`, `x_i(u)`, the torus, the `τ_i`,
//!   group conditions, membership in `K`, coset equality, Iwasawa shapes, Cartan types
//!   and generators of the block subgroup `U = H ∩ K`.
//! * [`enumerate_cells`]: every coset of `Kϖ^λK / K`, checked against the symbolic count.
//! * [`u_orbit_partition`] and [`index_compute`]: the mixed-coset and layer-index oracles.
//! * [`shape_census`] and [`convolution_counts`]: Satake and Hecke-algebra cross-checks.
//!
//! Cosets are compared by the reduced column Hermite form of `g` over the valuation ring:
//! since `K = G ∩ GL_n(O)`, `gK = hK` exactly when `gOⁿ = hOⁿ`.

mod census;
mod enumerate;
mod error;
mod index;
mod lattice;
mod matrix;
mod model;
mod orbits;
mod residue;
mod scalar;

pub use census::{convolution_counts, shape_census};
pub use enumerate::{enumerate_cells, EnumeratedCoset, Enumeration};
pub use error::PadicError;
pub use index::{index_compute, IndexLayer, IndexResult};
pub use lattice::{coset_key, elementary_divisors, CosetKey};
pub use matrix::LocalMatrix;
pub use model::{ModelPreset, UGenerator};
pub use orbits::{default_level, match_classes, u_orbit_partition, ClassMatch, OrbitPartition};
pub use residue::{Res, ResMatrix, Ring};
pub use scalar::LocalScalar;
