//! Exact computer algebra for the triangular factorization of the universal
//! R-matrix of quantum affine sl2, with a machine-checked identity suite.
//!
//! The crate computes the triangular factors of the R-matrix attached to the
//! current ("new realization") presentation of quantum affine sl2, entirely
//! in exact arithmetic over the rational-function field in `q`:
//!
//! - [`qfield`]: Laurent polynomials and rational functions in `q` (with
//!   `q^{1/2}`), one-sided series expansion, and multivariate rational
//!   functions with binomial-factored denominators.
//! - [`modealg`]: the nilpotent current algebras in mode form — words in
//!   `e_n` / `f_n`, straightening to ordered bases, the Hopf pairing, dual
//!   bases, screening operators and sign projectors.
//! - [`currents`]: closed-form pairings of probe words against products of
//!   currents at shifted arguments; the exact engine behind the current-level
//!   identity checks.
//! - [`rfactor`]: composed currents, the commuting integrands, and the
//!   triangular R-factor components by recurrence, closed form and
//!   multiplicative splitting, plus the factorization checks.
//! - [`evalrep`]: evaluation representations, exact residue calculus for the
//!   evaluated integrands, the Cartan factor, and a truncated Yang-Baxter
//!   check against the six-vertex R-matrix.
//! - [`combid`]: partition combinatorics and the q-series identity that
//!   underpins the projection calculus, with its Hall-Littlewood route.
//! - [`suite`]: the verification suites and machine-readable reports driven
//!   by the `uqsl2r` binary.

pub mod combid;
pub mod currents;
pub mod evalrep;
pub mod modealg;
pub mod qfield;
pub mod rfactor;
pub mod suite;
