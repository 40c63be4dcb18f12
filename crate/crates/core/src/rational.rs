//! Exact rational scalars and the integer combinatorics used everywhere else.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Canonical rational `n/d`.
pub fn rat(n: i64, d: i64) -> Result<BigRational> {
    if d == 0 {
        return Err(Error::ZeroDenominator);
    }
    Ok(BigRational::new(BigInt::from(n), BigInt::from(d)))
}

pub(crate) fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub(crate) fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Rising factorial (m+1)(m+2)⋯(m+a).
pub fn rising_from(m: usize, a: usize) -> BigInt {
    (1..=a).fold(BigInt::one(), |acc, i| acc * BigInt::from(m + i))
}

pub(crate) fn fact_q(n: usize) -> BigRational {
    BigRational::from_integer(factorial(n))
}

pub(crate) fn binom_q(n: usize, k: usize) -> BigRational {
    BigRational::from_integer(binomial(n, k))
}

/// `(-1)^e` as a rational.
pub(crate) fn sign(e: usize) -> BigRational {
    if e.is_multiple_of(2) {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

/// Formats as `p/q`, or `p` when the denominator is one.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Inverse of [`format_rational`]; also accepts non-canonical input such as `2/4`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidArgument(format!("not a rational: `{s}`"));
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(BigRational::new(n, d))
}
