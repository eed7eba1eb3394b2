//! Analysis of q-convex, q-concave, and q-affine sequences.
//!
//! A finite sequence `p` on an integer window is *q-convex* when
//! `2q p_i <= p_{i-1} + p_{i+1}` at every interior index, *q-concave*
//! under the reversed inequality, and *q-affine* when both hold. The crate
//! provides:
//!
//! - [`chebyshev`]: `T_k` and `U_k` for all integer orders, roots, and
//!   identity-residual checks;
//! - [`sequences`]: classification, q-affine construction and coefficient
//!   recovery, support chords, and min-envelopes;
//! - [`means`]: power means of chord ratios and the sharp (or lower-bound)
//!   constants they never dip below;
//! - [`contraction`]: the min-of-averages operator, weighted max norms,
//!   Lipschitz certificates, and certified fixed-point iteration;
//! - [`checks`]: seeded property sweeps backing the `qseq verify` command.

pub mod chebyshev;
pub mod checks;
#[cfg(feature = "cli")]
pub mod cli;
pub mod contraction;
pub mod error;
pub mod means;
pub mod sequences;

pub use chebyshev::{cheb_t, cheb_u, largest_root_t, largest_root_u, tau};
pub use contraction::{default_weights, weighted_norm, ContractionProblem, FixedPointResult};
pub use error::{Error, Result};
pub use means::{c_constant, mean_of_chord_ratios, power_mean, MeanSpec};
pub use sequences::{classify, AffineRep, Classification, Verdict, WindowSequence};
