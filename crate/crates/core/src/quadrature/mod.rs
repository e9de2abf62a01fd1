//! Floating-point evaluation of
//! `B_2m = (-1)^(m-1) / 2^(2m+1) · ∫ ((sech^2 x)^{(m-1)})^2 dx`
//! by composite Gauss-Legendre quadrature over `[-X, X]`.
//!
//! The integrand is `T_m(tanh x)^2`, with the exact tangent polynomial
//! rounded once to the working float type. Panels are summed in ascending
//! `x`, nodes within a panel likewise, so results are bitwise reproducible
//! for a fixed [`QuadratureSpec`].
//!
//! Precision: `precision_bits = 53` runs in `f64`, `24` in `f32`. The
//! coefficients of `T_m` grow like `m!` with alternating signs, so Horner
//! evaluation near `|y| = 1` cancels; the rounding part of the error
//! estimate tracks `Σ |c_i| |y|^i` pointwise to account for it.

pub mod gauss;

use num_rational::BigRational;
use num_traits::{Float, Zero};

pub use gauss::GaussLegendre;

use crate::bernoulli::bernoulli_oracle;
use crate::error::{Error, Result};
use crate::exact_algebra::rational::{int, to_f64};
use crate::exact_algebra::DensePoly;
use crate::tangent::{one_minus_y2, tangent_poly};

#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureSpec {
    /// Integrate over `[-truncation, truncation]`.
    pub truncation: f64,
    pub panels: usize,
    pub nodes_per_panel: usize,
    /// 53 (`f64`) or 24 (`f32`).
    pub precision_bits: u32,
    /// Relative accuracy the caller needs; rounding or truncation above it is an error.
    pub tolerance: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            truncation: 30.0,
            panels: 120,
            nodes_per_panel: 20,
            precision_bits: 53,
            tolerance: 1e-10,
        }
    }
}

impl QuadratureSpec {
    pub fn node_count(&self) -> usize {
        self.panels * self.nodes_per_panel
    }

    fn validate(&self) -> Result<()> {
        if !(self.truncation > 0.0 && self.truncation.is_finite()) {
            return Err(Error::InvalidArgument("truncation must be positive".into()));
        }
        if self.panels < 2 || self.panels % 2 != 0 {
            return Err(Error::InvalidArgument("panels must be even and >= 2".into()));
        }
        if self.nodes_per_panel == 0 {
            return Err(Error::InvalidArgument("nodes per panel must be >= 1".into()));
        }
        if !(self.tolerance > 0.0) {
            return Err(Error::InvalidArgument("tolerance must be positive".into()));
        }
        Ok(())
    }
}

/// Numerical `B_2m` with its error budget.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericBernoulli {
    pub m: usize,
    pub value: f64,
    /// `discretization + tail_bound + rounding`, already scaled to `B_2m`.
    pub error_estimate: f64,
    /// `|Q(panels) - Q(panels / 2)|`.
    pub discretization: f64,
    pub tail_bound: f64,
    pub rounding: f64,
    pub nodes: usize,
}

/// `(-1)^(m-1) / 2^(2m+1)`.
fn prefactor(m: usize) -> f64 {
    let s = if m % 2 == 1 { 1.0 } else { -1.0 };
    s * 2f64.powi(-(2 * m as i32 + 1))
}

/// `((sech^2 x)^{(m-1)})^2`, evaluated as `T_m(tanh x)^2`.
pub fn integrand_at(m: usize, x: f64) -> f64 {
    let c = tangent_poly(m).to_f64_coeffs();
    let v = horner(&c, x.tanh());
    v * v
}

fn horner<F: Float>(c: &[F], y: F) -> F {
    c.iter().rev().fold(F::zero(), |acc, &a| acc * y + a)
}

/// `Σ |c_i| |y|^i` and `Σ i |c_i| |y|^i`: magnitudes governing the
/// rounding error of Horner's rule and its sensitivity to `y`.
fn magnitudes<F: Float>(c: &[F], y: F) -> (F, F) {
    let ay = y.abs();
    let mut pw = F::one();
    let (mut a, mut b) = (F::zero(), F::zero());
    for (i, &ci) in c.iter().enumerate() {
        let t = ci.abs() * pw;
        a = a + t;
        b = b + F::from(i).unwrap() * t;
        pw = pw * ay;
    }
    (a, b)
}

struct PanelSum {
    value: f64,
    rounding: f64,
}

fn composite<F: Float>(coeffs: &[F], rule: &GaussLegendre, a: f64, b: f64, panels: usize) -> PanelSum {
    let eps = F::epsilon().to_f64().unwrap();
    let deg = coeffs.len() as f64;
    let h = (b - a) / panels as f64;
    let nodes: Vec<F> = rule.nodes.iter().map(|&t| F::from(t).unwrap()).collect();
    let weights: Vec<F> = rule.weights.iter().map(|&w| F::from(w).unwrap()).collect();
    let half = F::from(h / 2.0).unwrap();
    let mut total = F::zero();
    let mut abs_total = 0.0f64;
    let mut point_err = 0.0f64;
    for p in 0..panels {
        let mid = F::from(a + (p as f64 + 0.5) * h).unwrap();
        let mut panel = F::zero();
        for (t, w) in nodes.iter().zip(&weights) {
            let y = (mid + half * *t).tanh();
            let v = horner(coeffs, y);
            let f = v * v;
            panel = panel + *w * f;
            let (mag, dmag) = magnitudes(coeffs, y);
            let (vf, wf) = (v.to_f64().unwrap(), w.to_f64().unwrap());
            let delta = eps * (2.0 * deg * mag.to_f64().unwrap() + dmag.to_f64().unwrap());
            point_err += wf * (2.0 * vf.abs() * delta + delta * delta + eps * vf * vf);
            abs_total += (wf * vf * vf).abs();
        }
        total = total + panel * half;
    }
    let n = (panels * rule.len()) as f64;
    PanelSum {
        value: total.to_f64().unwrap(),
        rounding: point_err * h / 2.0 + 2.0 * eps * n * abs_total * h / 2.0,
    }
}

/// `T_m / (1 - y^2)`, a polynomial for `m >= 1`.
fn reduced_tangent(m: usize) -> DensePoly {
    tangent_poly(m)
        .div_exact(&one_minus_y2())
        .expect("1 - y^2 divides T_m for m >= 1")
}

/// Upper bound on `∫_{|x| > X} ((sech^2 x)^{(m-1)})^2 dx`.
///
/// Write `T_m = (1 - y^2) S_m`. For `x ≥ X`, `1 - y^2 = sech^2 x ≤ 4 e^{-2x}`
/// and `1 - y ≤ 2 e^{-2X}`, so `|S_m(y)| ≤ M = |S_m(1)| + 2 e^{-2X} Σ i |s_i|`
/// by the mean value theorem. Hence the integrand is at most
/// `16 M^2 e^{-4x}`, and both tails together at most `8 M^2 e^{-4X}`.
pub fn tail_bound(m: usize, truncation: f64) -> f64 {
    assert!(m >= 1, "tail bound needs m >= 1");
    let s = reduced_tangent(m);
    let at_one = to_f64(&s.eval(&int(1))).abs();
    let slope: BigRational = s
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| num_traits::Signed::abs(c) * int(i as i64))
        .fold(BigRational::zero(), |acc, t| acc + t);
    let big_m = at_one + 2.0 * (-2.0 * truncation).exp() * to_f64(&slope);
    8.0 * big_m * big_m * (-4.0 * truncation).exp()
}

fn integrate_with<F: Float>(m: usize, spec: &QuadratureSpec, a: f64, b: f64, panels: usize) -> PanelSum {
    let coeffs: Vec<F> = tangent_poly(m)
        .to_f64_coeffs()
        .into_iter()
        .map(|c| F::from(c).unwrap())
        .collect();
    composite(&coeffs, &GaussLegendre::new(spec.nodes_per_panel), a, b, panels)
}

fn integrate(m: usize, spec: &QuadratureSpec, a: f64, b: f64, panels: usize) -> Result<PanelSum> {
    match spec.precision_bits {
        53 => Ok(integrate_with::<f64>(m, spec, a, b, panels)),
        24 => Ok(integrate_with::<f32>(m, spec, a, b, panels)),
        bits => Err(Error::InvalidArgument(format!(
            "unsupported working precision {bits} bits (use 24 or 53)"
        ))),
    }
}

/// `∫_{-X}^{X} ((sech^2 x)^{(m-1)})^2 dx` with the given spec, unscaled.
pub fn main_integral_numeric(m: usize, spec: &QuadratureSpec) -> Result<f64> {
    spec.validate()?;
    let x = spec.truncation;
    Ok(integrate(m, spec, -x, x, spec.panels)?.value)
}

/// Same integral computed as twice the integral over `[0, X]` with half
/// the panels.
pub fn main_integral_numeric_half(m: usize, spec: &QuadratureSpec) -> Result<f64> {
    spec.validate()?;
    Ok(2.0 * integrate(m, spec, 0.0, spec.truncation, spec.panels / 2)?.value)
}

/// Numerical `B_2m`.
pub fn bernoulli_numeric(m: usize, spec: &QuadratureSpec) -> Result<NumericBernoulli> {
    if m == 0 {
        return Err(Error::InvalidArgument("quadrature route needs m >= 1".into()));
    }
    spec.validate()?;
    let x = spec.truncation;
    let fine = integrate(m, spec, -x, x, spec.panels)?;
    let coarse = integrate(m, spec, -x, x, spec.panels / 2)?;
    let scale = prefactor(m);
    let value = scale * fine.value;
    let discretization = (scale * (fine.value - coarse.value)).abs();
    let tail = (scale * tail_bound(m, x)).abs();
    let rounding = (scale * fine.rounding.max(coarse.rounding)).abs();
    let target = spec.tolerance * value.abs();
    if rounding > target {
        return Err(Error::PrecisionExhausted {
            requested: spec.tolerance,
            attainable: rounding / value.abs(),
        });
    }
    if tail > target {
        return Err(Error::InvalidArgument(format!(
            "truncation {x} too short: tail bound {tail:e} exceeds tolerance"
        )));
    }
    Ok(NumericBernoulli {
        m,
        value,
        error_estimate: discretization + tail + rounding,
        discretization,
        tail_bound: tail,
        rounding,
        nodes: spec.node_count(),
    })
}

/// One row of the quadrature report table.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureRecord {
    pub m: usize,
    pub numeric: NumericBernoulli,
    pub exact: BigRational,
    pub abs_error: f64,
    pub rel_error: f64,
}

pub fn quadrature_record(m: usize, spec: &QuadratureSpec) -> Result<QuadratureRecord> {
    let numeric = bernoulli_numeric(m, spec)?;
    let exact = bernoulli_oracle(2 * m);
    let e = to_f64(&exact);
    let abs_error = (numeric.value - e).abs();
    Ok(QuadratureRecord {
        m,
        rel_error: abs_error / e.abs(),
        abs_error,
        numeric,
        exact,
    })
}
