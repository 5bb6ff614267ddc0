//! Exact values of the Riemann zeta function at even integers.
//!
//! `zeta(2k)` is a rational multiple of `pi^(2k)`. This crate computes
//! that rational exactly, by two independent routes, and backs every
//! analytic claim along the way with either exact rational arithmetic or
//! validated ball arithmetic with explicit error radii:
//!
//! - [`zeta`]: the coefficients `C_k` with `zeta(2k) = C_k pi^(2k)`, via
//!   a triangular recurrence and via the Bernoulli closed form, plus a
//!   rigorous series bracket; the two routes must agree structurally.
//! - [`bernoulli`]: Bernoulli numbers in both sign conventions and
//!   Bernoulli polynomials with their calculus.
//! - [`fourier`]: the cosine moments `I(n, k)` of `x^(2k)` exactly in
//!   `Q[pi]`, cross-checked by validated Romberg quadrature, with
//!   partial sums, limits, and series reconstruction.
//! - [`identities`]: exact Bernoulli summation identities checked index
//!   by index, reporting the first failure with a witness.
//! - [`pi_poly`]: the `Q[pi]` representation those modules share.
//! - [`ball`]: dyadic ball arithmetic with containment guarantees,
//!   including enclosures of pi and cosine.
//!
//! The `basel` binary exposes all of it as `zeta`, `bernoulli`,
//! `verify` and `fourier` subcommands; see the README or the book under
//! `book/` for a guided tour.

pub mod ball;
pub mod bernoulli;
pub mod error;
pub mod fourier;
pub mod identities;
pub mod pi_poly;
pub mod rational;
pub mod render;
pub mod zeta;

pub use ball::ApproxReal;
pub use bernoulli::{bernoulli_number, bernoulli_polynomial, BernoulliConvention, RationalPolynomial};
pub use error::{Error, Result};
pub use fourier::{
    alternating_moment_limit, alternating_moment_partial_sum, cosine_moment,
    cosine_moment_quadrature, fourier_coefficients, reconstruct_at, EvalPoint, FourierCoefficients,
};
pub use identities::{
    binomial_sum_identity, even_sum_identity, full_sum_identity, generalized_sum, IdentityReport,
    IdentityStatus,
};
pub use pi_poly::PiPolynomial;
pub use rational::{BigInt, BigRational};
pub use zeta::{
    verify_route_equality, zeta_even_closed, zeta_even_numeric, zeta_even_recurrence, ZetaEvenValue,
};
