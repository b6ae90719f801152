//! Finite-level Schwartz functions on `X = F² × F²` and the GSp4 zeta verdict.
//!
//! * [`Level`] and [`FiniteSchwartz`]: functions on `(p^{−M}Z/p^N Z)⁴`, boxes `φ_{(u,v,w,x)}`.
//! * [`hecke_act`], [`frakh1`], [`psi`]: covariant Hecke actions of `H = GL₂ ×_{det} GL₂`
//!   built from concrete coset enumerations.
//! * [`FiniteAction`]: a compact group acting on the finite model with a character whose
//!   kernel is the normal subgroup `V`; stabilizer indices `[V_x : V]`.
//! * [`trace_check`] and [`trace_preimage`]: the trace criterion and its constructive proof.
//! * [`gsp4_zeta_verdict`]: all of the above combined at a concrete prime.

mod action;
mod error;
mod hecke;
mod space;
mod trace;
mod verdict;

pub use action::{h_tau1_action, h_tau1_generators, Character, FiniteAction, Orbit};
pub use error::SchwartzError;
pub use hecke::{
    explicit_hecke_image, frakh1, hecke_act, j_pushforward, psi, pushforward, right_coset_reps, swap_conjugate,
    to_int_matrix, IntMatrix, IntPair,
};
pub use space::{FiniteSchwartz, Level};
pub use trace::{
    check_invariant, support_stabilizer_indices, trace_check, trace_preimage, trace_sum, TraceOutcome, TraceWitness,
};
pub use verdict::{gsp4_zeta_verdict, restricted_operators, Gsp4Verdict};
