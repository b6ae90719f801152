//! Symbolic coset decompositions.
//!
//! * [`bn_cells`] splits `K_X w K_Y / K_Y` into Bruhat cells, one per minimal
//!   representative `τ ∈ [W_X / (W_X ∩ wW_Yw⁻¹)]`, each of size `q^{Σ d(s)}`.
//! * [`schubert_symbols`] indexes the cells of the minuscule operators `Kρ^kK` of `GL_n`.
//! * [`gln_mixed_table`], [`gln_mixed_degree`] and [`case_mixed_tables`] describe the
//!   mixed classes `U \ KwK / K` of the block subgroups used for zeta elements.

mod cells;
mod error;
mod mixed;
mod schubert;

pub use cells::{bn_cells, spherical_cells, BnDecomposition, CosetCell};
pub use error::DecomposeError;
pub use mixed::{
    block_cartan_count, case_mixed_tables, gln_mixed_degree, gln_mixed_table, l_kappa, lambda_kappa, partitions,
    LayerIndex, MixedClass, MixedClassTable,
};
pub use schubert::{gln_minuscule_total, schubert_symbols, SchubertSymbol};
