//! Laurent expansion `℘(z) = z^-2 + Σ_{k≥1} c_k z^(2k)` with `c_k` exact
//! polynomials in `g2, g3`, and the Bernoulli-Hurwitz numbers
//! `BH_{2k+2} = (2k+2) (2k)! c_k`.

use num_rational::BigRational;
use num_traits::Zero;

use super::bipoly::BiPoly;
use crate::exact_algebra::rational::{big, factorial, frac, int};
use crate::exact_algebra::{Coeff, TruncatedSeries};

/// Laurent coefficients `c_1 ..= c_K`.
#[derive(Clone, Debug, PartialEq)]
pub struct BHTable {
    coeffs: Vec<BiPoly>,
}

/// `(2k + 2) (2k)!`.
pub fn bh_factor(k: usize) -> BigRational {
    int(2 * k as i64 + 2) * big(factorial(2 * k as u64))
}

impl BHTable {
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// `c_k`, the coefficient of `z^(2k)`, for `1 <= k <= K`.
    pub fn laurent(&self, k: usize) -> &BiPoly {
        &self.coeffs[k - 1]
    }

    pub fn laurent_coeffs(&self) -> &[BiPoly] {
        &self.coeffs
    }

    /// `BH_{2k+2}`.
    pub fn bh(&self, k: usize) -> BiPoly {
        self.laurent(k).scale_by(&bh_factor(k))
    }

    /// Recovers `c_k` from `BH_{2k+2}`.
    pub fn laurent_from_bh(k: usize, bh: &BiPoly) -> BiPoly {
        bh.scale_by(&bh_factor(k).recip())
    }

    /// `c_k` at fixed rational invariants.
    pub fn laurent_at(&self, k: usize, g2: &BigRational, g3: &BigRational) -> BigRational {
        self.laurent(k).eval(g2, g3)
    }

    pub fn bh_at(&self, k: usize, g2: &BigRational, g3: &BigRational) -> BigRational {
        self.bh(k).eval(g2, g3)
    }
}

/// `c_1 = g2/20`, `c_2 = g3/28`, and for `k ≥ 3`
/// `c_k = 3 / ((2k+3)(k-2)) Σ_{i+j=k-1} c_i c_j`, from `℘'' = 6℘² - g2/2`.
pub fn wp_laurent(k_max: usize) -> BHTable {
    let mut c: Vec<BiPoly> = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        let next = match k {
            1 => BiPoly::g2().scale_by(&frac(1, 20)),
            2 => BiPoly::g3().scale_by(&frac(1, 28)),
            _ => {
                let conv = (1..k - 1).fold(BiPoly::zero(), |acc, i| {
                    acc.add_ref(&c[i - 1].mul_ref(&c[k - 2 - i]))
                });
                conv.scale_by(&frac(3, ((2 * k + 3) * (k - 2)) as i64))
            }
        };
        c.push(next);
    }
    BHTable { coeffs: c }
}

/// `z^6 [(℘')² - 4℘³ + g2 ℘ + g3]` through `z^(2K)`, built from the
/// truncated expansion; zero coefficients mean the ODE holds to that order.
/// In terms of `℘` itself this covers powers up to `z^(2K-6)`.
pub fn ode_residual(table: &BHTable) -> TruncatedSeries<BiPoly> {
    let k_max = table.order();
    let order = 2 * k_max;
    // f = z² ℘ = 1 + Σ c_k z^(2k+2);  h = z³ ℘' = -2 + Σ 2k c_k z^(2k+2)
    let f = TruncatedSeries::from_fn(order, |n| match n {
        0 => BiPoly::constant(int(1)),
        n if n >= 4 && n % 2 == 0 => table.laurent(n / 2 - 1).clone(),
        _ => BiPoly::zero(),
    });
    let h = TruncatedSeries::from_fn(order, |n| match n {
        0 => BiPoly::constant(int(-2)),
        n if n >= 4 && n % 2 == 0 => {
            let k = n / 2 - 1;
            table.laurent(k).scale_by(&int(2 * k as i64))
        }
        _ => BiPoly::zero(),
    });
    let z4f = TruncatedSeries::from_fn(order, |n| {
        if n >= 4 {
            f.coeff(n - 4).mul_ref(&BiPoly::g2())
        } else {
            BiPoly::zero()
        }
    });
    let z6g3 = TruncatedSeries::from_fn(order, |n| {
        if n == 6 {
            BiPoly::g3()
        } else {
            BiPoly::zero()
        }
    });
    let f3 = f.mul(&f).mul(&f);
    h.mul(&h).sub(&f3.scale(&int(4))).add(&z4f).add(&z6g3)
}
