use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("non-unit divisor")]
    NonUnitDivisor,
    #[error("index {0} out of range: the tangent integral route needs an index greater than 1")]
    OutOfLemmaRange(u64),
    #[error("(1 - y^2) does not divide T_{0}^2")]
    DivisibilityFailure(usize),
    #[error("Faulhaber inversion left a nonzero residual for m = {0}")]
    InversionFailed(usize),
    #[error("degenerate density at m = {0}: u_m^2 coefficient vanished")]
    DegenerateDensity(usize),
    #[error("substitution inconsistency: soliton integrand not divisible by 1 - y^2")]
    SubstitutionInconsistency,
    #[error("precision exhausted: requested tolerance {requested:e} below attainable {attainable:e}")]
    PrecisionExhausted { requested: f64, attainable: f64 },
    #[error("outside elliptic range: m = {0} must be greater than 1")]
    OutsideEllipticRange(u64),
    #[error("degenerate lattice: {0}")]
    DegenerateLattice(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
