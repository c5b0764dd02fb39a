//! Exact scalar arithmetic over the rational-function field in `q`.
//!
//! Everything downstream (mode algebras, triangular R-factors, evaluation
//! representations, partition identities) reduces to arithmetic in a handful
//! of exact coefficient domains built here:
//!
//! - [`UPoly`]: Laurent polynomials in `q` with arbitrary-precision rational
//!   coefficients. Exponents are stored doubled so `q^{1/2}` is representable
//!   without a field extension.
//! - [`Scalar`]: the fraction field of [`UPoly`] in canonical form. Canonical
//!   form is a normal form, so equality and zero tests are exact.
//! - [`RatX`]: a rational function in one auxiliary commuting variable with
//!   [`Scalar`] coefficients, together with one-sided series expansion
//!   ([`series_coefficients`]).
//! - [`MPoly`] / [`MultiScalar`]: sparse multivariate Laurent polynomials over
//!   [`Scalar`] in auxiliary variables (spectral parameters, evaluation
//!   points), with denominators kept as products of binomial factors.
//!
//! q-combinatorial helpers ([`q_number`], [`q_factorial`], [`qsq_factorial`])
//! and the structure functions `g`, `g'`, `psi`, `psi'` live in [`qnum`].

pub mod mpoly;
pub mod qnum;
pub mod scalar;
pub mod upoly;
pub mod xseries;

pub use mpoly::{Binom, MPoly, MultiScalar, VarSet};
pub use qnum::{
    g_at, g_fn, g_series_coeff, g_value, gp_fn, gp_series_coeff, gp_value, psi_fn, psip_fn,
    q_factorial, q_number, qinv_minus_q, qsq_factorial, qsq_number,
};
pub use scalar::Scalar;
pub use upoly::UPoly;
pub use xseries::{series_coefficients, ExpandAt, RatX, SeriesError};

#[cfg(test)]
mod tests;
