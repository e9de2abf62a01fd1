//! Reference route for Bernoulli numbers.
//!
//! Values come from the coefficient identity of `z / (e^z - 1)`:
//! `Σ_{j=0}^{n} C(n+1, j) B_j = 0` for `n ≥ 1`, `B_0 = 1`. Nothing here
//! depends on tangent polynomials or integrals, so the other routes can be
//! checked against it.

use std::sync::{OnceLock, RwLock};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exact_algebra::rational::{big, binomial, factorial, int, pow2};
use crate::exact_algebra::series::bernoulli_generating_series;
use crate::exact_algebra::{DensePoly, TruncatedSeries};

/// Append-only table of `B_0 ..= B_max`.
#[derive(Clone, Debug, Default)]
pub struct BernoulliTable {
    values: Vec<BigRational>,
}

impl BernoulliTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_max(n: usize) -> Self {
        let mut t = Self::new();
        t.extend_to(n);
        t
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, n: usize) -> Option<&BigRational> {
        self.values.get(n)
    }

    /// Computes every missing value through index `n`.
    pub fn extend_to(&mut self, n: usize) {
        while self.values.len() <= n {
            let k = self.values.len();
            let next = if k == 0 {
                BigRational::one()
            } else {
                let s: BigRational = self
                    .values
                    .iter()
                    .enumerate()
                    .map(|(j, b)| b * big(binomial(k as u64 + 1, j as u64)))
                    .sum();
                -s / int(k as i64 + 1)
            };
            self.values.push(next);
        }
    }
}

fn shared_table() -> &'static RwLock<BernoulliTable> {
    static TABLE: OnceLock<RwLock<BernoulliTable>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(BernoulliTable::new()))
}

/// Exact `B_n` from the shared table, extending it when needed.
pub fn bernoulli_oracle(n: usize) -> BigRational {
    {
        let table = shared_table().read().unwrap_or_else(|e| e.into_inner());
        if let Some(b) = table.get(n) {
            return b.clone();
        }
    }
    let mut table = shared_table().write().unwrap_or_else(|e| e.into_inner());
    table.extend_to(n);
    table.values[n].clone()
}

/// `B_n(x) = Σ_k C(n, k) B_k x^(n-k)`.
pub fn bernoulli_polynomial(n: usize) -> DensePoly {
    let mut coeffs = vec![BigRational::zero(); n + 1];
    for k in 0..=n {
        coeffs[n - k] = bernoulli_oracle(k) * big(binomial(n as u64, k as u64));
    }
    DensePoly::new(coeffs)
}

/// `a_{2n-1} = 2^(2n) B_(2n) / (2n)!`, the coefficient of `z^(2n-1)` in
/// `coth z - 1/z`. Panics for `n == 0`.
pub fn coth_coefficient(n: usize) -> BigRational {
    assert!(n >= 1, "coth coefficients start at n = 1");
    pow2(2 * n as u32) * bernoulli_oracle(2 * n) / big(factorial(2 * n as u64))
}

/// Series of `z coth z` through `z^order`, assembled from
/// `(w/2) coth(w/2) = w/2 + w/(e^w - 1)` with `w = 2z`.
pub fn z_coth_series(order: usize) -> TruncatedSeries<BigRational> {
    let half_w = TruncatedSeries::new(vec![BigRational::zero(), int(1) / int(2)], order);
    half_w
        .add(&bernoulli_generating_series(order))
        .rescale_var(&int(2))
}
