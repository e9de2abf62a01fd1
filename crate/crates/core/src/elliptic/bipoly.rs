use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exact_algebra::rational::to_f64;
use crate::exact_algebra::Coeff;

/// Polynomial in the invariants `g2, g3`; key `(a, b)` is `g2^a g3^b`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl BiPoly {
    pub fn monomial(c: BigRational, g2_pow: u32, g3_pow: u32) -> Self {
        let mut p = Self::default();
        p.add_term((g2_pow, g3_pow), c);
        p
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn g2() -> Self {
        Self::monomial(BigRational::one(), 1, 0)
    }

    pub fn g3() -> Self {
        Self::monomial(BigRational::one(), 0, 1)
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), BigRational> {
        &self.terms
    }

    pub fn coeff(&self, g2_pow: u32, g3_pow: u32) -> BigRational {
        self.terms
            .get(&(g2_pow, g3_pow))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    fn add_term(&mut self, key: (u32, u32), c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Every monomial `g2^a g3^b` has weight `4a + 6b`; `None` if mixed.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut w = self.terms.keys().map(|&(a, b)| 4 * a + 6 * b);
        let first = w.next()?;
        w.all(|v| v == first).then_some(first)
    }

    pub fn eval(&self, g2: &BigRational, g3: &BigRational) -> BigRational {
        self.terms
            .iter()
            .map(|(&(a, b), c)| c * num_traits::pow(g2.clone(), a as usize) * num_traits::pow(g3.clone(), b as usize))
            .fold(BigRational::zero(), |acc, t| acc + t)
    }

    pub fn eval_f64(&self, g2: f64, g3: f64) -> f64 {
        self.terms
            .iter()
            .map(|(&(a, b), c)| to_f64(c) * g2.powi(a as i32) * g3.powi(b as i32))
            .sum()
    }
}

impl Add for BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: BiPoly) -> BiPoly {
        self.add_ref(&rhs)
    }
}

impl Zero for BiPoly {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl std::ops::Mul for BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: BiPoly) -> BiPoly {
        self.mul_ref(&rhs)
    }
}

impl One for BiPoly {
    fn one() -> Self {
        Self::constant(BigRational::one())
    }
}

impl Coeff for BiPoly {
    fn add_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, -c.clone());
        }
        out
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = Self::default();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }

    fn scale_by(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::default();
        }
        Self {
            terms: self.terms.iter().map(|(&k, c)| (k, c * r)).collect(),
        }
    }

    fn unit_inverse(&self) -> Option<Self> {
        match self.terms.iter().next() {
            Some((&(0, 0), c)) if self.terms.len() == 1 => Some(Self::constant(c.recip())),
            _ => None,
        }
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&(a, b), c)) in self.terms.iter().enumerate() {
            let sep = match (i, c.is_negative()) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            write!(f, "{sep}{}", c.abs())?;
            if a > 0 {
                write!(f, "*g2{}", if a > 1 { format!("^{a}") } else { String::new() })?;
            }
            if b > 0 {
                write!(f, "*g3{}", if b > 1 { format!("^{b}") } else { String::new() })?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::rational::{frac, int};

    #[test]
    fn arithmetic_and_evaluation() {
        let p = BiPoly::g2().scale_by(&frac(1, 20)).add_ref(&BiPoly::g3());
        let sq = p.mul_ref(&p);
        assert_eq!(sq.coeff(2, 0), frac(1, 400));
        assert_eq!(sq.coeff(1, 1), frac(1, 10));
        assert_eq!(sq.eval(&int(20), &int(1)), int(4));
        assert!(p.sub_ref(&p).is_zero());
        assert_eq!(p.to_string(), "1*g3 + 1/20*g2");
        assert_eq!(BiPoly::g2().mul_ref(&BiPoly::g3()).homogeneous_weight(), Some(10));
    }

    #[test]
    fn only_nonzero_constants_are_units() {
        assert!(BiPoly::constant(int(3)).unit_inverse().is_some());
        assert!(BiPoly::g2().unit_inverse().is_none());
        assert!(BiPoly::zero().unit_inverse().is_none());
    }
}
