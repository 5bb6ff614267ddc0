//! Doc-test shim for the mdbook guide in `book/`.
//!
//! Each chapter is included verbatim as module documentation, so every
//! ```rust fence in the book compiles and runs under `cargo test`. If a
//! snippet drifts out of sync with the `basel` API, this crate fails to
//! build and CI catches it.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/exact-scalars.md")]
pub mod exact_scalars {}

#[doc = include_str!("../../../book/src/pi-polynomials.md")]
pub mod pi_polynomials {}

#[doc = include_str!("../../../book/src/validated-numerics.md")]
pub mod validated_numerics {}

#[doc = include_str!("../../../book/src/bernoulli.md")]
pub mod bernoulli {}

#[doc = include_str!("../../../book/src/zeta-two-ways.md")]
pub mod zeta_two_ways {}

#[doc = include_str!("../../../book/src/cosine-moments.md")]
pub mod cosine_moments {}

#[doc = include_str!("../../../book/src/identity-suites.md")]
pub mod identity_suites {}

#[doc = include_str!("../../../book/src/command-line.md")]
pub mod command_line {}
