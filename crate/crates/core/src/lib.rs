//! Reduced pipe dreams, antidiagonal families and hypergraph transversal duals.
//!
//! Every coordinate in this crate is 1-based `(row, column)` with row 1 at the
//! top of the `n × n` grid. The central objects are:
//!
//! * [`Permutation`] with its cached [`RankMatrix`],
//! * [`PipeDream`], a set of crossing tiles in the staircase `i + j ≤ n`,
//! * [`SetFamily`], a canonically ordered family of [`BoxSet`]s,
//! * the families `RP_w` ([`enumerate_rp`]) and `A_w` ([`antidiagonal_family`]),
//!   which are transversal duals of each other ([`transversal_dual`]).
//!
//! The [`laws`] module checks that duality, and the statements it rests on,
//! exhaustively over `S_n`.

pub mod antidiagonals;
pub mod boxes;
pub mod error;
pub mod laws;
pub mod permutations;
pub mod pipedreams;
pub mod schubert;
pub mod transversals;

pub use antidiagonals::{antidiagonal_family, antidiagonals_in_rectangle, Antidiagonal};
pub use boxes::{BoxSet, GridBox, MAX_GRID};
pub use error::{Error, Result};
pub use permutations::{all_permutations, bruhat_geq, Permutation, RankMatrix};
pub use pipedreams::{enumerate_rp, enumerate_rp_bruteforce, PipeDream, PipePair};
pub use schubert::{schubert_polynomial, specialize_all_ones, ExponentVector, Polynomial};
pub use transversals::{
    is_minimal_transversal, is_transversal, minimalize, transversal_dual, SetFamily,
};
