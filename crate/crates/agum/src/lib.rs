//! The anti-symmetric GUE minor process, end to end.
//!
//! An n×n anti-symmetric Gaussian matrix H = iA (A real, A^T = −A) has a
//! spectrum symmetric about 0; listing the positive eigenvalues of every
//! leading principal minor gives an interlaced triangular array with
//! ⌊k/2⌋ entries at level k. This crate implements that process and the
//! discrete half-hexagon tiling model that converges to it:
//!
//! * [`specfun`] — Hermite polynomials, Airy function, repeated erfc
//!   integrals, adaptive quadrature.
//! * [`halfhex`] — exact counts and measures for non-intersecting ±1
//!   walks above a wall (equivalently, rhombus tilings of a half hexagon),
//!   with a perfect sampler and a brute-force enumerator as oracle.
//! * [`measures`] — densities of the continuum limit: per-level eigenvalue
//!   PDFs, the joint interlaced-chain PDF, cone volumes and normalising
//!   constants.
//! * [`sampler`] — two independent exact samplers of the minor chain: dense
//!   matrix diagonalisation, and a matrix-free bordered recursion driven by
//!   root-finding of random rational functions.
//! * [`kernel`] — the finite-n determinantal correlation kernel and r-point
//!   correlation determinants.
//! * [`limits`] — Airy, extended-Airy, bead and hard-edge limit kernels plus
//!   the finite-n convergence harnesses.
//! * [`stats`] — Kolmogorov–Smirnov and χ² helpers for the verification
//!   suite.
//! * [`checks`] — the runnable acceptance suite (also exposed through the
//!   CLI as `verify all`).

pub mod error;
pub mod specfun;

pub mod halfhex;
pub mod kernel;
pub mod limits;
pub mod measures;
pub mod sampler;
pub mod stats;

pub mod checks;

pub use error::{Error, Result};
