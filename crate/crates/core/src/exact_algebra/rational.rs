//! Helpers around [`BigRational`].
//!
//! `num_rational::Ratio::new` reduces and normalizes the sign on
//! construction, so every value observed through this crate is already in
//! lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Integer as an exact rational.
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `num / den` reduced. Panics if `den == 0`.
pub fn frac(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn big(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

/// `2^k` as an exact rational.
pub fn pow2(k: u32) -> BigRational {
    big(BigInt::one() << k as usize)
}

/// `(-1)^k`.
pub fn sign_pow(k: u64) -> BigRational {
    if k % 2 == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Canonical `"p/q"` form: sign on the numerator, denominator always
/// present (`"5/1"`, `"0/1"`, `"-3/7"`).
pub fn to_pq(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parse `"p/q"` or a bare integer `"p"`. The result is reduced.
pub fn parse_pq(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    // accept the unicode minus used in printed tables
    let num = num.replace('\u{2212}', "-");
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// Nearest `f64`; exact for values whose numerator and denominator fit.
pub fn to_f64(r: &BigRational) -> f64 {
    if let (Some(n), Some(d)) = (r.numer().to_f64(), r.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && n.abs() < 9.0e15 && d < 9.0e15 {
            return n / d;
        }
    }
    // scale so the quotient keeps 64 significant bits before the final rounding
    let shift = r.numer().bits() as i64 - r.denom().bits() as i64 - 64;
    let scaled = if shift >= 0 {
        r.numer() / (r.denom() << shift as usize)
    } else {
        (r.numer() << (-shift) as usize) / r.denom()
    };
    let mantissa = scaled.to_f64().unwrap_or(f64::NAN);
    mantissa * 2f64.powi(shift as i32)
}

pub fn is_integer(r: &BigRational) -> bool {
    r.denom().is_one()
}

/// Sign of `r` as -1, 0 or 1.
pub fn signum(r: &BigRational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pq_format_is_canonical() {
        assert_eq!(to_pq(&frac(-6, 14)), "-3/7");
        assert_eq!(to_pq(&frac(6, -14)), "-3/7");
        assert_eq!(to_pq(&int(0)), "0/1");
        assert_eq!(to_pq(&frac(0, -5)), "0/1");
        assert_eq!(to_pq(&int(5)), "5/1");
    }

    #[test]
    fn parse_accepts_canonical_and_bare_forms() {
        assert_eq!(parse_pq("-691/2730").unwrap(), frac(-691, 2730));
        assert_eq!(parse_pq("4/8").unwrap(), frac(1, 2));
        assert_eq!(parse_pq("7").unwrap(), int(7));
        assert_eq!(parse_pq("\u{2212}1/30").unwrap(), frac(-1, 30));
        assert!(parse_pq("1/0").is_err());
        assert!(parse_pq("x/2").is_err());
    }

    #[test]
    fn binomials_and_factorials() {
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(10), BigInt::from(3_628_800));
    }

    #[test]
    fn float_conversion_handles_huge_parts() {
        assert_eq!(to_f64(&frac(1, 6)), 1.0 / 6.0);
        let big_ratio = BigRational::new(
            BigInt::from(10).pow(40) + 1,
            BigInt::from(10).pow(40) * 3,
        );
        assert!((to_f64(&big_ratio) - 1.0 / 3.0).abs() < 1e-16);
        let tiny = BigRational::new(BigInt::one(), BigInt::from(10).pow(50));
        assert!((to_f64(&tiny) / 1e-50 - 1.0).abs() < 1e-15);
    }
}
