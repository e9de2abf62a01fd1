//! Bernoulli numbers computed along independent routes and cross-checked:
//!
//! * [`bernoulli`]: the classical recurrence (the reference route),
//!   Bernoulli polynomials and the `coth` expansion;
//! * [`tangent`]: derivative polynomials of `tanh` and the exact integral
//!   `B_m = 2^-(m+1) ∫_{-1}^{1} T_{m-1}`;
//! * [`quadrature`]: floating-point integration of the squared derivatives
//!   of `sech^2` over the real line;
//! * [`kdv`]: conserved densities of the KdV equation evaluated exactly at
//!   the one-soliton profile, tied to [`faulhaber`] polynomials.
//!
//! [`elliptic`] covers the Weierstrass `℘` analogue.

pub mod bernoulli;
pub mod elliptic;
pub mod error;
pub mod exact_algebra;
pub mod faulhaber;
pub mod kdv;
pub mod quadrature;
pub mod tangent;

pub use error::{Error, Result};
pub use exact_algebra::{BigRational, DensePoly, TruncatedSeries};
