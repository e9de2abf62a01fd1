use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exact_algebra::rational::{int, to_pq};

/// Exponent vector: entry `k` is the power of `u_k`, the `k`-th
/// x-derivative of `u`. Trailing zeros are never stored.
pub type Exponents = Vec<u32>;

/// Polynomial in `u, u_1, u_2, ...` with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DiffPoly {
    terms: BTreeMap<Exponents, BigRational>,
}

fn trim(mut e: Exponents) -> Exponents {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

/// `u_k` has weight `k + 2`.
pub fn monomial_weight(e: &[u32]) -> u32 {
    e.iter().enumerate().map(|(k, &p)| p * (k as u32 + 2)).sum()
}

/// Highest derivative order present, `None` for the constant monomial.
pub fn top_order(e: &[u32]) -> Option<usize> {
    e.iter().rposition(|&p| p > 0)
}

impl DiffPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(Vec::new(), c)
    }

    pub fn monomial(exps: Exponents, c: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(exps, c);
        p
    }

    /// `u_k`.
    pub fn var(k: usize) -> Self {
        let mut e = vec![0; k + 1];
        e[k] = 1;
        Self::monomial(e, BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, BigRational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigRational {
        self.terms
            .get(&trim(exps.to_vec()))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, exps: Exponents, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let key = trim(exps);
        let slot = self.terms.entry(key.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let n = ea.len().max(eb.len());
                let e = (0..n)
                    .map(|k| ea.get(k).unwrap_or(&0) + eb.get(k).unwrap_or(&0))
                    .collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Highest derivative order appearing anywhere.
    pub fn max_order(&self) -> Option<usize> {
        self.terms.keys().filter_map(|e| top_order(e)).max()
    }

    /// Common weight of all monomials, `None` if mixed or zero.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut weights = self.terms.keys().map(|e| monomial_weight(e));
        let w = weights.next()?;
        weights.all(|v| v == w).then_some(w)
    }

    /// `∂ / ∂u_k`.
    pub fn partial(&self, k: usize) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let p = e.get(k).copied().unwrap_or(0);
            if p == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[k] -= 1;
            out.add_term(e2, c * int(p as i64));
        }
        out
    }

    /// Total x-derivative: `u_k ↦ u_{k+1}` extended by the Leibniz rule.
    pub fn total_x_derivative(&self) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            for (k, &p) in e.iter().enumerate() {
                if p == 0 {
                    continue;
                }
                let mut e2 = e.clone();
                e2[k] -= 1;
                if e2.len() <= k + 1 {
                    e2.resize(k + 2, 0);
                }
                e2[k + 1] += 1;
                out.add_term(e2, c * int(p as i64));
            }
        }
        out
    }

    /// `D_x` applied `n` times.
    pub fn total_x_derivative_n(&self, n: usize) -> Self {
        (0..n).fold(self.clone(), |acc, _| acc.total_x_derivative())
    }

    /// Variational derivative `Σ_k (-D_x)^k ∂p/∂u_k`. Vanishes exactly on
    /// total derivatives (up to constants).
    pub fn euler_operator(&self) -> Self {
        let Some(top) = self.max_order() else {
            return Self::zero();
        };
        let mut out = Self::zero();
        for k in 0..=top {
            let mut term = self.partial(k).total_x_derivative_n(k);
            if k % 2 == 1 {
                term = term.scale(&-BigRational::one());
            }
            out = out.add(&term);
        }
        out
    }

    /// Serialization as `(exponent vector, "p/q")` pairs sorted
    /// lexicographically by exponent vector, every vector padded to the
    /// same length (one past the highest order present).
    pub fn to_pairs(&self) -> Vec<(Vec<u32>, String)> {
        let width = self.max_order().map_or(0, |k| k + 1);
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e.resize(width, 0);
                (e, to_pq(c))
            })
            .collect()
    }
}

impl fmt::Display for DiffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // highest weight / order first reads more naturally
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            let mut factors: Vec<String> = Vec::new();
            for (k, &p) in e.iter().enumerate() {
                if p == 0 {
                    continue;
                }
                let name = if k == 0 { "u".to_string() } else { format!("u{k}") };
                factors.push(if p == 1 { name } else { format!("{name}^{p}") });
            }
            if factors.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{a}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}
