//! KdV conserved densities as differential polynomials, and their exact
//! values at the one-soliton profile.

pub mod density;
pub mod diffpoly;
pub mod soliton;

pub use density::{build_densities, build_density, canonicalize, is_conserved, ConservedDensity};
pub use diffpoly::DiffPoly;
pub use soliton::{
    bernoulli_via_kdv, evaluate_at_soliton, exact_main_integral, faulhaber_side, verify_formula1,
};
