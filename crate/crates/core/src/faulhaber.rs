//! Faulhaber polynomials `F_m(λ)` recovered from
//! `B_{2m+2}(x + 1) = (2m + 2) F_m((x^2 + x) / 2) + B_{2m+2}`.

use num_rational::BigRational;
use num_traits::Zero;

use crate::bernoulli::{bernoulli_oracle, bernoulli_polynomial};
use crate::error::{Error, Result};
use crate::exact_algebra::rational::{int, pow2};
use crate::exact_algebra::DensePoly;

#[derive(Clone, Debug, PartialEq)]
pub struct FaulhaberPoly {
    pub m: usize,
    /// `alphas[i]` is the coefficient of `λ^(i+2)`.
    pub alphas: Vec<BigRational>,
}

impl FaulhaberPoly {
    /// `F_m` as a polynomial in `λ`.
    pub fn to_poly(&self) -> DensePoly {
        let mut coeffs = vec![BigRational::zero(); 2];
        coeffs.extend(self.alphas.iter().cloned());
        DensePoly::new(coeffs)
    }

    /// `α_2^m`, the λ² coefficient.
    pub fn alpha2(&self) -> &BigRational {
        &self.alphas[0]
    }
}

/// `(x^2 + x) / 2`.
pub fn lambda_of_x() -> DensePoly {
    DensePoly::new(vec![int(0), int(1) / int(2), int(1) / int(2)])
}

/// Peels `G(x) = (B_{2m+2}(x+1) - B_{2m+2}) / (2m+2)` from the top: the
/// basis element `λ^k` has degree `2k` in `x` with leading coefficient
/// `2^-k`, so the `x^(2k)` coefficient of the residual fixes `α_k`. The
/// residual left after `k = 2` must vanish, which confirms there are no
/// `λ^0` or `λ^1` terms.
pub fn faulhaber_from_bernoulli(m: usize) -> Result<FaulhaberPoly> {
    if m == 0 {
        return Err(Error::InvalidArgument("Faulhaber index must be >= 1".into()));
    }
    let n = 2 * m + 2;
    let shifted = bernoulli_polynomial(n).compose(&DensePoly::from_ints(&[1, 1]));
    let mut residual = (&shifted - &DensePoly::constant(bernoulli_oracle(n)))
        .scale(&int(n as i64).recip());
    let lambda = lambda_of_x();
    let mut alphas = vec![BigRational::zero(); m];
    for k in (2..=m + 1).rev() {
        if residual.degree().is_some_and(|d| d > 2 * k) {
            return Err(Error::InversionFailed(m));
        }
        let alpha = residual.coeff(2 * k) * pow2(k as u32);
        residual = &residual - &lambda.pow(k as u32).scale(&alpha);
        alphas[k - 2] = alpha;
    }
    if !residual.is_zero() {
        return Err(Error::InversionFailed(m));
    }
    Ok(FaulhaberPoly { m, alphas })
}

/// `(2m + 2) F_m((x^2 + x) / 2) + B_{2m+2}`, which should be `B_{2m+2}(x + 1)`.
pub fn reconstruct_shifted_bernoulli(f: &FaulhaberPoly) -> DensePoly {
    let n = 2 * f.m + 2;
    let composed = f.to_poly().compose(&lambda_of_x());
    &composed.scale(&int(n as i64)) + &DensePoly::constant(bernoulli_oracle(n))
}

/// `α_2^m == 2 (2m + 1) B_2m`.
pub fn verify_alpha2(m: usize) -> Result<bool> {
    let f = faulhaber_from_bernoulli(m)?;
    Ok(f.alpha2() == &(int(2 * (2 * m as i64 + 1)) * bernoulli_oracle(2 * m)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::rational::frac;

    #[test]
    fn low_order_polynomials() {
        assert_eq!(faulhaber_from_bernoulli(1).unwrap().alphas, vec![int(1)]);
        assert_eq!(
            faulhaber_from_bernoulli(2).unwrap().alphas,
            vec![frac(-1, 3), frac(4, 3)]
        );
        assert_eq!(faulhaber_from_bernoulli(3).unwrap().alphas[0], frac(1, 3));
        assert!(faulhaber_from_bernoulli(0).is_err());
    }

    #[test]
    fn polynomial_has_no_low_terms() {
        for m in 1..=8 {
            let p = faulhaber_from_bernoulli(m).unwrap().to_poly();
            assert!(p.coeff(0).is_zero() && p.derivative().coeff(0).is_zero());
            assert_eq!(p.degree(), Some(m + 1));
        }
    }

    #[test]
    fn round_trip_and_alpha2() {
        for m in 1..=12 {
            let f = faulhaber_from_bernoulli(m).unwrap();
            assert_eq!(f.alphas.len(), m);
            assert!(!f.alphas[m - 1].is_zero());
            let want = bernoulli_polynomial(2 * m + 2).compose(&DensePoly::from_ints(&[1, 1]));
            assert_eq!(reconstruct_shifted_bernoulli(&f), want, "m = {m}");
            assert!(verify_alpha2(m).unwrap(), "m = {m}");
        }
    }

    #[test]
    fn alpha2_uses_listed_b12() {
        let f = faulhaber_from_bernoulli(6).unwrap();
        assert_eq!(f.alpha2(), &(int(26) * frac(-691, 2730)));
    }

    #[test]
    fn sums_of_odd_powers() {
        // F_m(n(n+1)/2) = Σ_{k=1}^{n} k^(2m+1), a classical check independent of the inversion
        for m in 1..=5u32 {
            let f = faulhaber_from_bernoulli(m as usize).unwrap().to_poly();
            for n in 1..=8i64 {
                let direct: i64 = (1..=n).map(|k| k.pow(2 * m + 1)).sum();
                assert_eq!(f.eval(&int(n * (n + 1) / 2)), int(direct));
            }
        }
    }
}
