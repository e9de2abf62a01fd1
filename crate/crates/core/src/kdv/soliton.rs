//! Exact evaluation of conserved integrals at `u = -2λ sech^2 x`.
//!
//! With `y = tanh x`, `u_k = -2λ T_{k+1}(y)` and `dx = dy / (1 - y^2)`, so
//! `∫ P dx` becomes an integral over `[-1, 1]` of a polynomial in `y`, one
//! power of `λ` per factor of `u`.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::density::ConservedDensity;
use super::diffpoly::DiffPoly;
use crate::error::{Error, Result};
use crate::exact_algebra::rational::{int, pow2, sign_pow};
use crate::exact_algebra::DensePoly;
use crate::faulhaber::faulhaber_from_bernoulli;
use crate::tangent::{one_minus_y2, sech2_derivative_square_integral, tangent_poly};

/// `∫ p dx` at the scaled soliton, as a polynomial in `λ`.
pub fn evaluate_diffpoly_at_soliton(p: &DiffPoly) -> Result<DensePoly> {
    let divisor = one_minus_y2();
    let mut powers: HashMap<(usize, u32), DensePoly> = HashMap::new();
    let mut by_degree: Vec<BigRational> = Vec::new();
    for (e, c) in p.terms() {
        let degree: u32 = e.iter().sum();
        if degree == 0 {
            return Err(Error::SubstitutionInconsistency);
        }
        let mut q = DensePoly::constant(c * pow2(degree) * sign_pow(degree as u64));
        for (k, &pw) in e.iter().enumerate() {
            if pw == 0 {
                continue;
            }
            let factor = powers
                .entry((k, pw))
                .or_insert_with(|| tangent_poly(k + 1).pow(pw));
            q = &q * factor;
        }
        let integrand = q.div_exact(&divisor).ok_or(Error::SubstitutionInconsistency)?;
        let value = integrand.definite_integral(&int(-1), &int(1));
        let d = degree as usize;
        if by_degree.len() <= d {
            by_degree.resize(d + 1, BigRational::zero());
        }
        by_degree[d] += value;
    }
    Ok(DensePoly::new(by_degree))
}

/// `I_m[-2λ sech^2 x]` as a polynomial in `λ`.
pub fn evaluate_at_soliton(d: &ConservedDensity) -> Result<DensePoly> {
    evaluate_diffpoly_at_soliton(&d.density)
}

/// `(-1)^(m-1) 2^(2m+2) / (2m+1) · F_m(λ)`.
pub fn faulhaber_side(m: usize) -> Result<DensePoly> {
    let f = faulhaber_from_bernoulli(m)?;
    let factor = sign_pow(m as u64 - 1) * pow2(2 * m as u32 + 2) / int(2 * m as i64 + 1);
    Ok(f.to_poly().scale(&factor))
}

/// Checks `I_{m-1}[-2λ sech^2 x] = (-1)^(m-1) 2^(2m+2)/(2m+1) F_m(λ)`
/// given `P_{m-1}`.
pub fn verify_formula1(density: &ConservedDensity) -> Result<bool> {
    let m = density.m + 1;
    Ok(evaluate_at_soliton(density)? == faulhaber_side(m)?)
}

/// `∫ ((sech^2 x)^{(m-1)})^2 dx` exactly.
pub fn exact_main_integral(m: usize) -> Result<BigRational> {
    if m == 0 {
        return Err(Error::InvalidArgument("main integral needs m >= 1".into()));
    }
    sech2_derivative_square_integral(m)
}

/// `B_2m` from the main integral: `(-1)^(m-1) / 2^(2m+1) · ∫ ((sech^2 x)^{(m-1)})^2 dx`.
pub fn bernoulli_via_kdv(m: usize) -> Result<BigRational> {
    Ok(sign_pow(m as u64 - 1) * exact_main_integral(m)? / pow2(2 * m as u32 + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bernoulli::bernoulli_oracle;
    use crate::exact_algebra::rational::frac;
    use crate::kdv::density::{build_density, build_densities};

    #[test]
    fn p0_at_soliton() {
        let d = build_density(0).unwrap();
        let v = evaluate_at_soliton(&d).unwrap();
        assert_eq!(v, DensePoly::monomial(frac(16, 3), 2));
        assert_eq!(v, faulhaber_side(1).unwrap());
    }

    #[test]
    fn soliton_integrals_match_faulhaber_low_orders() {
        for d in build_densities(3).unwrap() {
            let v = evaluate_at_soliton(&d).unwrap();
            assert_eq!(v.degree(), Some(d.m + 2));
            assert!(v.eval(&int(0)).is_zero());
            assert!(verify_formula1(&d).unwrap(), "m = {}", d.m + 1);
        }
    }

    #[test]
    fn quadratic_coefficient_is_main_integral() {
        // the λ² coefficient only sees u_{m-1}^2, i.e. 4 ∫ ((sech^2)^{(m-1)})^2
        for d in build_densities(4).unwrap() {
            let m = d.m + 1;
            let v = evaluate_at_soliton(&d).unwrap();
            assert_eq!(v.coeff(2), int(4) * exact_main_integral(m).unwrap());
        }
    }

    #[test]
    fn main_integral_examples() {
        assert_eq!(exact_main_integral(1).unwrap(), frac(4, 3));
        assert_eq!(exact_main_integral(2).unwrap(), frac(16, 15));
        assert_eq!(exact_main_integral(3).unwrap(), frac(64, 21));
        for m in 1..=12 {
            assert_eq!(bernoulli_via_kdv(m).unwrap(), bernoulli_oracle(2 * m));
        }
    }

    #[test]
    fn constant_density_is_rejected() {
        let c = DiffPoly::constant(int(1));
        assert_eq!(
            evaluate_diffpoly_at_soliton(&c),
            Err(Error::SubstitutionInconsistency)
        );
    }
}
