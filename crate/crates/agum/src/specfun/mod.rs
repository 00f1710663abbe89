//! Numerically stable special functions used by every other module:
//! Hermite polynomials and half-line norms, the Airy function, repeated
//! integrals of the complementary error function, and adaptive quadrature
//! over finite and semi-infinite ranges.
//!
//! Everything here is pure and reentrant.

pub mod airy;
pub mod erfc;
pub mod hermite;
pub mod quad;

pub use airy::{airy_ai, airy_ai_prime};
pub use erfc::{erf, erfc, erfcx, ierfc, ierfc_family_scaled, ierfc_scaled, ln_erfc};
pub use hermite::{
    hermite_eval, hermite_norm, hermite_weighted, ln_factorial, ln_gamma_j, ln_hermite_norm,
    WeightedValue,
};
pub use quad::{quad_finite, quad_semiinf, QuadResult};
