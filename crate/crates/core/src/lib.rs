//! Chromatic symmetric homology of small multigraphs, over exact rationals.
//!
//! A graph `G` with `m` edges has `2^m` spanning subgraphs ("states"), which
//! form a Boolean lattice. Each state carries a graded module over the
//! symmetric group on the vertices; signed per-edge maps between adjacent
//! states assemble into a bigraded chain complex whose homology categorifies
//! Stanley's chromatic symmetric function `X_G`: the Frobenius series
//! `Frob_G(q,t)` of the homology specializes to `X_G` at `q = t = 1`.
//!
//! The crate is organized bottom-up:
//!
//! - [`partition`], [`symfunc`]: partitions, symmetric-group characters and
//!   the power-sum / Schur / monomial calculus used to decompose modules.
//! - [`perm`]: permutations, Young-subgroup coset representatives.
//! - [`graphstate`]: multigraphs, the state lattice, edge signs, and both
//!   computations of `X_G` (states formula and coloring oracle).
//! - [`linalg`]: sparse exact-rational matrices and fraction-free
//!   elimination.
//! - [`repmod`]: concrete realizations of the state modules and of every
//!   per-edge map, as explicit matrices.
//! - [`homengine`]: chain-complex assembly, bigraded homology with Specht
//!   decompositions, the Frobenius series, and the verification suite.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals and
//! all ranks come from fraction-free elimination.

pub mod graphstate;
pub mod homengine;
pub mod linalg;
pub mod partition;
pub mod perm;
pub mod repmod;
pub mod symfunc;

pub use graphstate::Multigraph;
pub use homengine::{BigradedSeries, ChainComplex, HomologySummary};
pub use partition::Partition;
pub use symfunc::{Q, SymExpr};
