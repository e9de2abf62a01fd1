//! Exact arithmetic substrate: rationals, dense polynomials and truncated
//! power series. All values are immutable once built.

pub mod poly;
pub mod rational;
pub mod series;

pub use num_rational::BigRational;
pub use poly::DensePoly;
pub use series::{Coeff, TruncatedSeries};
