//! `℘` on rectangular lattices by its q-series, and the cycle integrals
//! `B^ell_2m = (-1)^(m-1) / 2^(2m+1) ∫ (℘^{(m-1)})² dz`.
//!
//! Half-periods are `ω1 > 0` and `ω2 = i·omega2_im`; the nome
//! `q = exp(-π omega2_im / ω1)` is real in `(0, 1)`. On the horizontal
//! cycle `z = t + ω2`, `t ∈ [0, 2ω1]`, the expansion
//!
//! `℘(t + ω2) = (π/2ω1)² [-1/3 + 8 Σ n q^2n/(1-q^2n) - 8 Σ n q^n/(1-q^2n) cos(nπt/ω1)]`
//!
//! is real, smooth and `2ω1`-periodic, and its `t`-derivatives follow
//! termwise.

use std::f64::consts::PI;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RectLattice {
    /// Real half-period.
    pub omega1: f64,
    /// Imaginary part of the purely imaginary half-period.
    pub omega2_im: f64,
}

/// Numeric invariants.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InvariantPair {
    pub g2: f64,
    pub g3: f64,
}

impl InvariantPair {
    pub fn discriminant(&self) -> f64 {
        self.g2.powi(3) - 27.0 * self.g3 * self.g3
    }
}

/// Cutoff for the q-series tails, relative to the running sum.
const SERIES_EPS: f64 = 1e-18;
const MAX_TERMS: usize = 200_000;

impl RectLattice {
    pub fn new(omega1: f64, omega2_im: f64) -> Result<Self> {
        let l = Self { omega1, omega2_im };
        l.validate()?;
        Ok(l)
    }

    fn validate(&self) -> Result<()> {
        let ok = |v: f64| v.is_finite() && v > 0.0;
        if !ok(self.omega1) || !ok(self.omega2_im) {
            return Err(Error::DegenerateLattice(format!(
                "half-periods must be positive and finite, got {} and {}i",
                self.omega1, self.omega2_im
            )));
        }
        if self.nome() >= 1.0 - 1e-12 || self.nome() <= 0.0 {
            return Err(Error::DegenerateLattice(format!(
                "nome {} outside (0, 1)",
                self.nome()
            )));
        }
        Ok(())
    }

    pub fn nome(&self) -> f64 {
        (-PI * self.omega2_im / self.omega1).exp()
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self {
            omega1: s * self.omega1,
            omega2_im: s * self.omega2_im,
        }
    }

    /// `g2 = (π/ω1)^4 / 12 · (1 + 240 Σ σ3(n) q^2n)`,
    /// `g3 = (π/ω1)^6 / 216 · (1 - 504 Σ σ5(n) q^2n)`.
    pub fn invariants(&self) -> InvariantPair {
        let q2 = self.nome().powi(2);
        // Σ σ_k(n) x^n = Σ n^k x^n / (1 - x^n)
        let lambert = |k: i32| {
            let mut s = 0.0;
            for n in 1..MAX_TERMS {
                let x = q2.powi(n as i32);
                let t = (n as f64).powi(k) * x / (1.0 - x);
                s += t;
                if t < SERIES_EPS * s.abs().max(1.0) {
                    break;
                }
            }
            s
        };
        let a = PI / self.omega1;
        InvariantPair {
            g2: a.powi(4) / 12.0 * (1.0 + 240.0 * lambert(3)),
            g3: a.powi(6) / 216.0 * (1.0 - 504.0 * lambert(5)),
        }
    }

    /// Fourier data of `℘^{(deriv)}` on the cycle: constant term and
    /// amplitudes `b_n` of `cos(nπt/ω1 + deriv·π/2)`, `n = 1, 2, ...`.
    fn cycle_fourier(&self, deriv: u32) -> (f64, Vec<f64>) {
        let q = self.nome();
        let pre = (PI / (2.0 * self.omega1)).powi(2);
        let freq = PI / self.omega1;
        let mut amps = Vec::new();
        let mut constant_sum = 0.0;
        let mut peak = 0.0f64;
        for n in 1..MAX_TERMS {
            let nf = n as f64;
            let qn = q.powi(n as i32);
            let denom = 1.0 - qn * qn;
            let b = -8.0 * pre * nf * qn / denom * (nf * freq).powi(deriv as i32);
            constant_sum += nf * qn * qn / denom;
            peak = peak.max(b.abs());
            amps.push(b);
            // the amplitudes rise as n^deriv before the geometric decay wins
            let past_peak = nf * (1.0 - q) > deriv as f64 + 1.0;
            if past_peak && b.abs() < SERIES_EPS * peak {
                break;
            }
        }
        let constant = if deriv == 0 {
            pre * (-1.0 / 3.0 + 8.0 * constant_sum)
        } else {
            0.0
        };
        (constant, amps)
    }

    /// `℘^{(deriv)}(t + ω2)` for real `t`.
    pub fn wp_eval(&self, t: f64, deriv: u32) -> Result<f64> {
        self.validate()?;
        let (c, amps) = self.cycle_fourier(deriv);
        Ok(eval_fourier(c, &amps, PI * t / self.omega1, deriv))
    }

    /// `℘(x)` for real `x` off the lattice, from
    /// `(π/2ω1)² [-1/3 + csc²(v) + 8 Σ n q^2n/(1-q^2n) (1 - cos 2nv)]`, `v = πx/2ω1`.
    pub fn wp_real_axis(&self, x: f64) -> Result<f64> {
        self.validate()?;
        let q2 = self.nome().powi(2);
        let v = PI * x / (2.0 * self.omega1);
        let mut s = 0.0;
        for n in 1..MAX_TERMS {
            let x_n = q2.powi(n as i32);
            let nf = n as f64;
            let t = nf * x_n / (1.0 - x_n);
            s += t * (1.0 - (2.0 * nf * v).cos());
            if t < SERIES_EPS {
                break;
            }
        }
        let pre = (PI / (2.0 * self.omega1)).powi(2);
        Ok(pre * (-1.0 / 3.0 + 1.0 / v.sin().powi(2) + 8.0 * s))
    }
}

/// `c + Σ b_n cos(nθ + deriv·π/2)`, summed from the smallest terms up.
fn eval_fourier(c: f64, amps: &[f64], theta: f64, deriv: u32) -> f64 {
    let phase = |x: f64| match deriv % 4 {
        0 => x.cos(),
        1 => -x.sin(),
        2 => -x.cos(),
        _ => x.sin(),
    };
    let s: f64 = amps
        .iter()
        .enumerate()
        .rev()
        .map(|(i, b)| b * phase((i + 1) as f64 * theta))
        .sum();
    c + s
}

/// `(-1)^(m-1) / 2^(2m+1)`.
fn prefactor(m: usize) -> f64 {
    let s = if m % 2 == 1 { 1.0 } else { -1.0 };
    s * 2f64.powi(-(2 * m as i32 + 1))
}

/// `B^ell_2m` on the cycle `t + ω2`, `t ∈ [0, 2ω1]`, by the `nodes`-point
/// trapezoid rule (exact for trigonometric polynomials of degree < nodes).
pub fn bell_numeric(l: &RectLattice, m: usize, nodes: usize) -> Result<f64> {
    if m <= 1 {
        return Err(Error::OutsideEllipticRange(m as u64));
    }
    if nodes == 0 {
        return Err(Error::InvalidArgument("node count must be positive".into()));
    }
    l.validate()?;
    let deriv = m as u32 - 1;
    let (c, amps) = l.cycle_fourier(deriv);
    let h = 2.0 * l.omega1 / nodes as f64;
    let mut sum = 0.0;
    for j in 0..nodes {
        let theta = 2.0 * PI * j as f64 / nodes as f64;
        let v = eval_fourier(c, &amps, theta, deriv);
        sum += v * v;
    }
    Ok(prefactor(m) * sum * h)
}

/// Outcome of [`bell_converged`].
#[derive(Clone, Debug, PartialEq)]
pub struct BellResult {
    pub value: f64,
    pub nodes: usize,
    /// `|value(nodes) - value(nodes / 2)|`.
    pub last_change: f64,
}

/// Doubles the node count from 8 until successive values differ by less
/// than `tol`.
pub fn bell_converged(l: &RectLattice, m: usize, tol: f64) -> Result<BellResult> {
    let mut nodes = 8;
    let mut prev = bell_numeric(l, m, nodes)?;
    loop {
        nodes *= 2;
        let next = bell_numeric(l, m, nodes)?;
        let change = (next - prev).abs();
        if change < tol {
            return Ok(BellResult {
                value: next,
                nodes,
                last_change: change,
            });
        }
        if nodes > 1 << 20 {
            return Err(Error::PrecisionExhausted {
                requested: tol,
                attainable: change,
            });
        }
        prev = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::laurent::wp_laurent;

    fn lattices() -> Vec<RectLattice> {
        vec![
            RectLattice::new(1.0, 1.0).unwrap(),
            RectLattice::new(1.0, 0.6).unwrap(),
            RectLattice::new(0.8, 1.7).unwrap(),
        ]
    }

    #[test]
    fn square_lattice_has_vanishing_g3() {
        let g = RectLattice::new(1.0, 1.0).unwrap().invariants();
        assert!(g.g3.abs() < 1e-12 * g.g2.powf(1.5));
        assert!(g.discriminant() > 0.0);
    }

    #[test]
    fn ode_holds_on_cycle() {
        for l in lattices() {
            let g = l.invariants();
            for t in [0.0, 0.13, 0.5, 1.1] {
                let p = l.wp_eval(t, 0).unwrap();
                let dp = l.wp_eval(t, 1).unwrap();
                let rhs = 4.0 * p.powi(3) - g.g2 * p - g.g3;
                let scale = 4.0 * p.abs().powi(3) + g.g2.abs() * p.abs() + g.g3.abs();
                assert!((dp * dp - rhs).abs() < 1e-12 * scale, "{l:?} t = {t}");
                // second derivative: ℘'' = 6℘² - g2/2
                let d2 = l.wp_eval(t, 2).unwrap();
                assert!((d2 - (6.0 * p * p - g.g2 / 2.0)).abs() < 1e-11 * (6.0 * p * p + g.g2));
            }
        }
    }

    #[test]
    fn periodic_on_cycle() {
        for l in lattices() {
            for d in 0..4 {
                let a = l.wp_eval(0.3, d).unwrap();
                let b = l.wp_eval(0.3 + 2.0 * l.omega1, d).unwrap();
                assert!((a - b).abs() < 1e-10 * a.abs().max(1.0));
            }
        }
    }

    #[test]
    fn real_axis_matches_laurent_expansion() {
        let table = wp_laurent(6);
        for l in lattices() {
            let g = l.invariants();
            for z in [0.05f64, 0.1, 0.2] {
                let series: f64 = 1.0 / (z * z)
                    + (1..=6)
                        .map(|k| table.laurent(k).eval_f64(g.g2, g.g3) * z.powi(2 * k as i32))
                        .sum::<f64>();
                let direct = l.wp_real_axis(z).unwrap();
                assert!((series - direct).abs() < 1e-9 * direct, "{l:?} z = {z}: {series} vs {direct}");
            }
        }
    }

    #[test]
    fn bell_matches_parseval_sum() {
        // ∫_0^{2ω1} (Σ b_n cos(nθ + φ))² dt = ω1 Σ b_n²
        for l in lattices() {
            for m in 2..=4 {
                let (_, amps) = l.cycle_fourier(m as u32 - 1);
                let parseval = prefactor(m) * l.omega1 * amps.iter().map(|b| b * b).sum::<f64>();
                let trap = bell_numeric(&l, m, 256).unwrap();
                assert!((trap - parseval).abs() < 1e-12 * parseval.abs(), "{l:?} m = {m}");
            }
        }
    }

    #[test]
    fn scaling_law() {
        for l in lattices() {
            for m in [2usize, 3] {
                let base = bell_numeric(&l, m, 512).unwrap();
                let scaled = bell_numeric(&l.scaled(2.0), m, 512).unwrap();
                let want = base * 2f64.powi(-(2 * m as i32) - 1);
                assert!((scaled - want).abs() < 1e-8 * want.abs());
            }
        }
    }

    #[test]
    fn errors() {
        let l = RectLattice::new(1.0, 1.0).unwrap();
        assert_eq!(bell_numeric(&l, 1, 64), Err(Error::OutsideEllipticRange(1)));
        assert!(RectLattice::new(-1.0, 1.0).is_err());
        assert!(RectLattice::new(1.0, f64::NAN).is_err());
        let bad = RectLattice { omega1: 1.0, omega2_im: 0.0 };
        assert!(bad.wp_eval(0.0, 0).is_err());
    }

    #[test]
    fn converged_value_is_stable() {
        let l = RectLattice::new(1.0, 1.0).unwrap();
        let r = bell_converged(&l, 3, 1e-12).unwrap();
        assert!(r.last_change < 1e-12);
        assert_eq!(r.value, bell_numeric(&l, 3, r.nodes).unwrap());
    }
}
