//! Rational Darboux extensions of the trigonometric and hyperbolic
//! Pöschl–Teller potentials and of the isotonic oscillator.
//!
//! Everything algebraic is exact over the rationals: seed factorization
//! functions, partner potentials, Gauss-seed Heine and exceptional
//! polynomials, and the residual certificates that prove them. The [`vlab`]
//! module adds floating-point checks (quadrature, finite-difference spectra)
//! for the claims that are not algebraic identities.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod darboux;
pub mod error;
pub mod exactpoly;
pub mod seedcat;
pub mod vlab;
pub mod xopgen;
pub mod zerocensus;

pub use error::{DegenerateReason, Error, Result};
pub use exactpoly::{Poly, Rational, RationalFn};
