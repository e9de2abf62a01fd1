use std::fmt::Debug;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::DensePoly;
use super::rational::factorial;
use crate::error::{Error, Result};

/// Exact commutative coefficient ring for [`TruncatedSeries`].
pub trait Coeff: Clone + PartialEq + Debug + Zero + One {
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn scale_by(&self, r: &BigRational) -> Self;
    /// Multiplicative inverse when `self` is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;
}

impl Coeff for BigRational {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn scale_by(&self, r: &BigRational) -> Self {
        self * r
    }
    fn unit_inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

impl Coeff for DensePoly {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn scale_by(&self, r: &BigRational) -> Self {
        self.scale(r)
    }
    fn unit_inverse(&self) -> Option<Self> {
        match self.degree() {
            Some(0) => Some(DensePoly::constant(self.coeff(0).recip())),
            _ => None,
        }
    }
}

/// Power series in `z` known exactly through `z^order`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> TruncatedSeries<C> {
    /// Pads or truncates `coeffs` to `order + 1` entries.
    pub fn new(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![C::one()], order)
    }

    /// The series `z`.
    pub fn z(order: usize) -> Self {
        Self::new(vec![C::zero(), C::one()], order)
    }

    /// Builds the series from `f(k)` for `k = 0..=order`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> C) -> Self {
        Self {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    /// Lowest index with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec(), order)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Self::from_fn(n, |k| self.coeffs[k].add_ref(&rhs.coeffs[k]))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Self::from_fn(n, |k| self.coeffs[k].sub_ref(&rhs.coeffs[k]))
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self::from_fn(self.order(), |k| self.coeffs[k].scale_by(r))
    }

    /// Cauchy product, truncated at the smaller order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut out = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Self { coeffs: out }
    }

    /// Drops the first `k` coefficients (division by `z^k`). The order
    /// falls by `k` since nothing is known past the old truncation.
    pub fn shift_down(&self, k: usize) -> Self {
        Self {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    /// Exact quotient `self / den`.
    ///
    /// A common leading power `z^v` of numerator and denominator is cancelled
    /// first, so the result is known through `z^(order - v)`.
    pub fn divide(&self, den: &Self) -> Result<Self> {
        let n = self.order().min(den.order());
        let v = den.valuation().filter(|&v| v <= n).ok_or(Error::NonUnitDivisor)?;
        if self.coeffs[..v].iter().any(|c| !c.is_zero()) {
            return Err(Error::NonUnitDivisor);
        }
        let num = self.truncate(n).shift_down(v);
        let den = den.truncate(n).shift_down(v);
        let inv0 = den.coeffs[0].unit_inverse().ok_or(Error::NonUnitDivisor)?;
        let m = n - v;
        let mut out: Vec<C> = Vec::with_capacity(m + 1);
        for k in 0..=m {
            let mut acc = num.coeffs[k].clone();
            for j in 1..=k {
                acc = acc.sub_ref(&den.coeffs[j].mul_ref(&out[k - j]));
            }
            out.push(acc.mul_ref(&inv0));
        }
        Ok(Self { coeffs: out })
    }

    /// `f(c z)`: scales the coefficient of `z^k` by `c^k`.
    pub fn rescale_var(&self, c: &BigRational) -> Self {
        let mut pw = BigRational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.scale_by(&pw));
            pw *= c;
        }
        Self { coeffs: out }
    }
}

/// Series `Σ z^k / k!` restricted to the indices selected by `keep`.
fn exp_like(order: usize, keep: impl Fn(usize) -> bool) -> TruncatedSeries<BigRational> {
    TruncatedSeries::from_fn(order, |k| {
        if keep(k) {
            BigRational::from_integer(factorial(k as u64)).recip()
        } else {
            BigRational::zero()
        }
    })
}

/// `e^z` through `z^order`.
pub fn exp_series(order: usize) -> TruncatedSeries<BigRational> {
    exp_like(order, |_| true)
}

pub fn sinh_series(order: usize) -> TruncatedSeries<BigRational> {
    exp_like(order, |k| k % 2 == 1)
}

pub fn cosh_series(order: usize) -> TruncatedSeries<BigRational> {
    exp_like(order, |k| k % 2 == 0)
}

/// `z / (e^z - 1)` through `z^order`; its coefficients are `B_k / k!`.
pub fn bernoulli_generating_series(order: usize) -> TruncatedSeries<BigRational> {
    let em1 = exp_series(order + 1).sub(&TruncatedSeries::one(order + 1));
    TruncatedSeries::z(order + 1)
        .divide(&em1)
        .expect("e^z - 1 has valuation one")
}
