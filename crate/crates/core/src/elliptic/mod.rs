//! Weierstrass `℘`: exact Bernoulli-Hurwitz numbers from the Laurent
//! expansion, and cycle integrals of squared `℘` derivatives on
//! rectangular lattices.

pub mod bipoly;
pub mod laurent;
pub mod lattice;

pub use bipoly::BiPoly;
pub use laurent::{ode_residual, wp_laurent, BHTable};
pub use lattice::{bell_converged, bell_numeric, BellResult, InvariantPair, RectLattice};
