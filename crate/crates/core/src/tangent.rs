//! Derivative polynomials of `tanh`.
//!
//! `T_n(y)` is the `n`-th derivative of `tanh x` written in `y = tanh x`:
//! `T_0 = y`, `T_n = (1 - y^2) T_{n-1}'`. Since `d tanh x / dx = sech^2 x`,
//! `(sech^2 x)^{(k)} = T_{k+1}(tanh x)`, which is how the integrals over the
//! real line turn into exact integrals over `[-1, 1]`.

use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_algebra::rational::{big, factorial, int, pow2, sign_pow};
use crate::exact_algebra::series::{cosh_series, sinh_series};
use crate::exact_algebra::{DensePoly, TruncatedSeries};

/// Append-only sequence `T_0 ..= T_max`.
#[derive(Clone, Debug)]
pub struct TangentSeq {
    polys: Vec<DensePoly>,
}

impl Default for TangentSeq {
    fn default() -> Self {
        Self {
            polys: vec![DensePoly::x()],
        }
    }
}

impl TangentSeq {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_max(n: usize) -> Self {
        let mut s = Self::new();
        s.extend_to(n);
        s
    }

    pub fn extend_to(&mut self, n: usize) {
        let one_minus_sq = one_minus_y2();
        while self.polys.len() <= n {
            let next = &one_minus_sq * &self.polys.last().unwrap().derivative();
            self.polys.push(next);
        }
    }

    pub fn get(&self, n: usize) -> Option<&DensePoly> {
        self.polys.get(n)
    }

    pub fn polys(&self) -> &[DensePoly] {
        &self.polys
    }
}

/// `1 - y^2`.
pub fn one_minus_y2() -> DensePoly {
    DensePoly::from_ints(&[1, 0, -1])
}

fn shared_seq() -> &'static RwLock<TangentSeq> {
    static SEQ: OnceLock<RwLock<TangentSeq>> = OnceLock::new();
    SEQ.get_or_init(|| RwLock::new(TangentSeq::new()))
}

/// `T_n`.
pub fn tangent_poly(n: usize) -> DensePoly {
    {
        let seq = shared_seq().read().unwrap_or_else(|e| e.into_inner());
        if let Some(p) = seq.get(n) {
            return p.clone();
        }
    }
    let mut seq = shared_seq().write().unwrap_or_else(|e| e.into_inner());
    seq.extend_to(n);
    seq.polys[n].clone()
}

/// `|T_{2m-1}(0)|`. Panics for `m == 0`.
pub fn tangent_number(m: usize) -> BigUint {
    assert!(m >= 1, "tangent numbers start at m = 1");
    let c = tangent_poly(2 * m - 1).coeff(0);
    debug_assert!(c.is_integer());
    c.to_integer().abs().to_biguint().unwrap()
}

/// Per-coefficient outcome of the generating-function check.
#[derive(Clone, Debug, PartialEq)]
pub struct Lemma1Report {
    /// `coefficients[k]` is true when the `z^k` coefficients agree.
    pub coefficients: Vec<bool>,
}

impl Lemma1Report {
    pub fn all_pass(&self) -> bool {
        self.coefficients.iter().all(|&ok| ok)
    }
}

/// Checks `T(x, z) (cosh z + x sinh z) = sinh z + x cosh z` through `z^order`,
/// where `T(x, z) = Σ T_n(x) z^n / n!`, with polynomial-in-`x` coefficients.
pub fn verify_lemma1(order: usize) -> Lemma1Report {
    let gen = TruncatedSeries::from_fn(order, |n| {
        tangent_poly(n).scale(&big(factorial(n as u64)).recip())
    });
    let x = DensePoly::x();
    let lift = |s: &TruncatedSeries<BigRational>, factor: &DensePoly| {
        TruncatedSeries::from_fn(order, |k| factor.scale(s.coeff(k)))
    };
    let (sinh, cosh) = (sinh_series(order), cosh_series(order));
    let one = DensePoly::one();
    let den = lift(&cosh, &one).add(&lift(&sinh, &x));
    let rhs = lift(&sinh, &one).add(&lift(&cosh, &x));
    let lhs = gen.mul(&den);
    Lemma1Report {
        coefficients: (0..=order).map(|k| lhs.coeff(k) == rhs.coeff(k)).collect(),
    }
}

/// `B_m = 2^-(m+1) ∫_{-1}^{1} T_{m-1}(x) dx` for `m > 1`.
pub fn bernoulli_via_tangent(m: usize) -> Result<BigRational> {
    if m <= 1 {
        return Err(Error::OutOfLemmaRange(m as u64));
    }
    let integral = tangent_poly(m - 1).definite_integral(&int(-1), &int(1));
    Ok(integral / pow2(m as u32 + 1))
}

/// Both sides of `∫_{-1}^{1} T_n = (2n + 2) / (2^(n+1) - 1) · T_n(0)`.
pub fn eq12_sides(n: usize) -> (BigRational, BigRational) {
    let t = tangent_poly(n);
    let lhs = t.definite_integral(&int(-1), &int(1));
    let factor = int(2 * n as i64 + 2) / (pow2(n as u32 + 1) - int(1));
    (lhs, factor * t.coeff(0))
}

pub fn verify_eq12(n: usize) -> bool {
    let (lhs, rhs) = eq12_sides(n);
    lhs == rhs
}

/// `B_2n` as `2^-2n (k_0/1 + k_1/3 + ... + k_n/(2n+1))`.
#[derive(Clone, Debug, PartialEq)]
pub struct OddFractionDecomposition {
    /// Coefficients of `y^0, y^2, ..., y^2n` in `T_{2n-1}`.
    pub numerators: Vec<BigInt>,
    pub value: BigRational,
}

pub fn odd_fraction_decomposition(n: usize) -> OddFractionDecomposition {
    assert!(n >= 1, "decomposition starts at n = 1");
    let t = tangent_poly(2 * n - 1);
    let numerators: Vec<BigInt> = (0..=n).map(|i| t.coeff(2 * i).to_integer()).collect();
    let sum: BigRational = numerators
        .iter()
        .enumerate()
        .map(|(i, k)| BigRational::new(k.clone(), BigInt::from(2 * i + 1)))
        .sum();
    OddFractionDecomposition {
        numerators,
        value: sum / pow2(2 * n as u32),
    }
}

/// `∫_{-1}^{1} T_m(y)^2 / (1 - y^2) dy`, which is `∫ ((sech^2 x)^{(m-1)})^2 dx`.
pub fn sech2_derivative_square_integral(m: usize) -> Result<BigRational> {
    let t = tangent_poly(m);
    let integrand = (&t * &t)
        .div_exact(&one_minus_y2())
        .ok_or(Error::DivisibilityFailure(m))?;
    Ok(integrand.definite_integral(&int(-1), &int(1)))
}

/// Both sides of the integration-by-parts reduction
/// `(-1)^(m-1) ∫ T_m^2 / (1 - y^2) dy = ∫ T_{2m-1} dy` over `[-1, 1]`.
pub fn parts_reduction_sides(m: usize) -> Result<(BigRational, BigRational)> {
    if m == 0 {
        return Err(Error::InvalidArgument("parts reduction needs m >= 1".into()));
    }
    let lhs = sign_pow(m as u64 - 1) * sech2_derivative_square_integral(m)?;
    let rhs = tangent_poly(2 * m - 1).definite_integral(&int(-1), &int(1));
    Ok((lhs, rhs))
}

pub fn verify_parts_reduction(m: usize) -> Result<bool> {
    let (lhs, rhs) = parts_reduction_sides(m)?;
    Ok(lhs == rhs)
}

/// Checks the structural properties of `T_n`: degree `n+1`, leading
/// coefficient `(-1)^n n!`, parity, `T_n(1) = 0`, integer coefficients with
/// alternating signs. Returns a description of the first violation.
pub fn check_tangent_invariants(n: usize) -> std::result::Result<(), String> {
    let t = tangent_poly(n);
    if t.degree() != Some(n + 1) {
        return Err(format!("T_{n}: degree {:?}", t.degree()));
    }
    let lead = sign_pow(n as u64) * big(factorial(n as u64));
    if t.leading() != Some(&lead) {
        return Err(format!("T_{n}: leading coefficient"));
    }
    if !t.is_integral() {
        return Err(format!("T_{n}: non-integer coefficient"));
    }
    if n >= 1 {
        let reflected = t.compose(&DensePoly::from_ints(&[0, -1]));
        let want = if n % 2 == 1 { t.clone() } else { -&t };
        if reflected != want {
            return Err(format!("T_{n}: parity"));
        }
        if !t.eval(&BigRational::one()).is_zero() {
            return Err(format!("T_{n}(1) != 0"));
        }
    }
    let nonzero: Vec<_> = t.coeffs().iter().filter(|c| !c.is_zero()).collect();
    if nonzero.windows(2).any(|w| w[0].is_positive() == w[1].is_positive()) {
        return Err(format!("T_{n}: signs do not alternate"));
    }
    Ok(())
}
