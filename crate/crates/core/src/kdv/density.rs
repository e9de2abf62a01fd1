//! Conserved densities of `u_t = 6 u u_x - u_xxx`.
//!
//! Densities come from the Gardner expansion `u = w + ε w_x + ε² w²`, under
//! which `w_t` is a total x-derivative, so every coefficient `w_n` of
//! `w = Σ ε^n w_n` is a conserved density. Odd `n` give total derivatives;
//! `w_{2m+2}` has weight `2m + 4` and, reduced modulo `D_x` and scaled,
//! becomes `P_m`.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::diffpoly::{top_order, DiffPoly, Exponents};
use crate::error::{Error, Result};
use crate::exact_algebra::rational::int;

#[derive(Clone, Debug, PartialEq)]
pub struct ConservedDensity {
    pub m: usize,
    /// Canonical form with the coefficient of `u_m^2` equal to one.
    pub density: DiffPoly,
}

/// Right-hand side of the evolution equation, `6 u u_1 - u_3`.
pub fn kdv_flux() -> DiffPoly {
    DiffPoly::var(0)
        .mul(&DiffPoly::var(1))
        .scale(&int(6))
        .sub(&DiffPoly::var(3))
}

/// `D_t p = Σ_k ∂p/∂u_k · D_x^k(6 u u_1 - u_3)`.
pub fn time_derivative(p: &DiffPoly) -> DiffPoly {
    let Some(top) = p.max_order() else {
        return DiffPoly::zero();
    };
    let mut flux = kdv_flux();
    let mut out = DiffPoly::zero();
    for k in 0..=top {
        out = out.add(&p.partial(k).mul(&flux));
        flux = flux.total_x_derivative();
    }
    out
}

/// `∫ p dx` is conserved iff `D_t p` is a total x-derivative.
pub fn is_conserved(p: &DiffPoly) -> bool {
    time_derivative(p).euler_operator().is_zero()
}

/// Gardner coefficients `w_0 ..= w_n`:
/// `w_0 = u`, `w_1 = -u_1`, `w_n = -D_x w_{n-1} - Σ_{i+j=n-2} w_i w_j`.
pub fn gardner_coefficients(n: usize) -> Vec<DiffPoly> {
    let mut w: Vec<DiffPoly> = vec![DiffPoly::var(0)];
    for k in 1..=n {
        let mut next = w[k - 1].total_x_derivative().scale(&-BigRational::one());
        if k >= 2 {
            for i in 0..=k - 2 {
                next = next.sub(&w[i].mul(&w[k - 2 - i]));
            }
        }
        w.push(next);
    }
    w
}

/// Monomial `c · N · u_{k-1}^a · u_k` with the top derivative `u_k`
/// appearing linearly is replaced by `-c/(a+1) · D_x(N) · u_{k-1}^(a+1)`,
/// the same class modulo `D_x`. Pick order: highest top derivative first,
/// then the lexicographically largest exponent vector.
fn next_reducible(p: &DiffPoly) -> Option<(Exponents, usize)> {
    p.terms()
        .keys()
        .filter_map(|e| {
            let k = top_order(e)?;
            (k >= 1 && e[k] == 1).then_some((e.clone(), k))
        })
        .max_by(|(ea, ka), (eb, kb)| ka.cmp(kb).then_with(|| ea.cmp(eb)))
}

/// Canonical representative modulo total x-derivatives: every monomial has
/// its highest derivative with exponent at least two (or is `c·u`, or a
/// constant). The representative is unique because a nonzero `D_x q`
/// always contains a monomial whose top derivative appears linearly.
pub fn canonicalize(p: &DiffPoly) -> DiffPoly {
    let mut p = p.clone();
    while let Some((e, k)) = next_reducible(&p) {
        let c = p.coeff(&e);
        p.add_term(e.clone(), -c.clone());
        let a = e[k - 1];
        let mut rest = e.clone();
        rest[k] = 0;
        rest[k - 1] = 0;
        let n_part = DiffPoly::monomial(rest, BigRational::one());
        let mut raised = vec![0; k];
        raised[k - 1] = a + 1;
        let replacement = n_part
            .total_x_derivative()
            .mul(&DiffPoly::monomial(raised, BigRational::one()))
            .scale(&(-c / int(a as i64 + 1)));
        p = p.add(&replacement);
    }
    p
}

/// Exponent vector of `u_m^2`.
pub fn leading_exponents(m: usize) -> Exponents {
    let mut e = vec![0; m + 1];
    e[m] = 2;
    e
}

fn normalize(m: usize, raw: &DiffPoly) -> Result<ConservedDensity> {
    let reduced = canonicalize(raw);
    let lead = reduced.coeff(&leading_exponents(m));
    if lead.is_zero() {
        return Err(Error::DegenerateDensity(m));
    }
    let density = reduced.scale(&lead.recip());
    // every other monomial must involve derivatives of order < m only
    let ok = density.terms().keys().all(|e| {
        *e == leading_exponents(m) || top_order(e).is_none_or(|k| k < m)
    });
    if !ok {
        return Err(Error::DegenerateDensity(m));
    }
    Ok(ConservedDensity { m, density })
}

/// `P_0 ..= P_mmax`, each reduced, normalized and checked for conservation.
pub fn build_densities(mmax: usize) -> Result<Vec<ConservedDensity>> {
    let w = gardner_coefficients(2 * mmax + 2);
    (0..=mmax)
        .map(|m| {
            let d = normalize(m, &w[2 * m + 2])?;
            if !is_conserved(&d.density) {
                return Err(Error::DegenerateDensity(m));
            }
            Ok(d)
        })
        .collect()
}

pub fn build_density(m: usize) -> Result<ConservedDensity> {
    Ok(build_densities(m)?.pop().expect("non-empty"))
}

impl ConservedDensity {
    pub fn weight(&self) -> u32 {
        2 * self.m as u32 + 4
    }

    pub fn is_normalized(&self) -> bool {
        self.density.coeff(&leading_exponents(self.m)).is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(k: usize) -> DiffPoly {
        DiffPoly::var(k)
    }

    #[test]
    fn p0_is_u_squared() {
        let d = build_density(0).unwrap();
        assert_eq!(d.density, u(0).mul(&u(0)));
    }

    #[test]
    fn p1_coefficient_forced_by_conservation() {
        // brute force: only c = 2 makes u_1^2 + c u^3 conserved among small integers
        let conserved: Vec<i64> = (-6..=6)
            .filter(|&c| {
                let cand = u(1).mul(&u(1)).add(&u(0).mul(&u(0)).mul(&u(0)).scale(&int(c)));
                is_conserved(&cand)
            })
            .collect();
        assert_eq!(conserved, vec![2]);
        let d = build_density(1).unwrap();
        assert_eq!(d.density, u(1).mul(&u(1)).add(&u(0).mul(&u(0)).mul(&u(0)).scale(&int(2))));
    }

    #[test]
    fn conservation_examples() {
        assert!(is_conserved(&u(0).mul(&u(0))));
        assert!(is_conserved(&u(0)));
        assert!(is_conserved(&u(1)));
        assert!(!is_conserved(&u(0).mul(&u(0)).mul(&u(0))));
    }

    #[test]
    fn u_squared_time_derivative_is_a_total_derivative() {
        // D_t u^2 = D_x(4u^3 - 2 u u_2 + u_1^2)
        let lhs = time_derivative(&u(0).mul(&u(0)));
        let q = u(0)
            .mul(&u(0))
            .mul(&u(0))
            .scale(&int(4))
            .sub(&u(0).mul(&u(2)).scale(&int(2)))
            .add(&u(1).mul(&u(1)));
        assert_eq!(lhs, q.total_x_derivative());
    }

    #[test]
    fn odd_gardner_coefficients_are_trivial() {
        let w = gardner_coefficients(9);
        for n in (1..=9).step_by(2) {
            assert!(canonicalize(&w[n]).is_zero(), "w_{n}");
        }
    }

    #[test]
    fn densities_are_homogeneous_and_normalized() {
        let ds = build_densities(6).unwrap();
        for d in &ds {
            assert!(d.is_normalized());
            assert_eq!(d.density.homogeneous_weight(), Some(d.weight()));
            assert!(is_conserved(&d.density));
        }
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let d = build_density(3).unwrap();
        assert_eq!(canonicalize(&d.density), d.density);
    }

    #[test]
    fn canonicalize_removes_total_derivatives() {
        let q = u(0).mul(&u(0)).mul(&u(3)).add(&u(1).mul(&u(2)).mul(&u(2)));
        assert!(canonicalize(&q.total_x_derivative()).is_zero());
        // u u_2 ≡ -u_1^2
        assert_eq!(canonicalize(&u(0).mul(&u(2))), u(1).mul(&u(1)).scale(&int(-1)));
    }
}
