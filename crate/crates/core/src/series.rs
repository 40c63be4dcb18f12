//! Truncated formal power series in t over a coefficient ring.
//!
//! Coefficients are ordinary (`coeffs[k]` is the coefficient of t^k), so an
//! exponential generating function contributes `a_k / k!`. Every operation
//! keeps terms t⁰..t^N for the series' order N and never touches anything
//! beyond it.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lambda_poly::LambdaPoly;
use crate::rational::fact_q;
use crate::xpoly::XPoly;

/// The rings used as series coefficients: ℚ, ℚ[λ] and ℚ[λ][x].
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(c: &BigRational) -> Self;
    /// Multiplicative inverse when `self` is a nonzero rational constant.
    fn unit_inverse(&self) -> Option<Self>;
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_rational(c: &BigRational) -> Self {
        c.clone()
    }
    fn unit_inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

impl Ring for LambdaPoly {
    fn zero() -> Self {
        LambdaPoly::zero()
    }
    fn one() -> Self {
        LambdaPoly::one()
    }
    fn is_zero(&self) -> bool {
        LambdaPoly::is_zero(self)
    }
    fn from_rational(c: &BigRational) -> Self {
        LambdaPoly::constant(c.clone())
    }
    fn unit_inverse(&self) -> Option<Self> {
        self.as_constant()
            .filter(|c| !Zero::is_zero(c))
            .map(|c| LambdaPoly::constant(c.recip()))
    }
}

impl Ring for XPoly {
    fn zero() -> Self {
        XPoly::zero()
    }
    fn one() -> Self {
        XPoly::one()
    }
    fn is_zero(&self) -> bool {
        XPoly::is_zero(self)
    }
    fn from_rational(c: &BigRational) -> Self {
        XPoly::constant(LambdaPoly::constant(c.clone()))
    }
    fn unit_inverse(&self) -> Option<Self> {
        self.as_constant()
            .and_then(|c| Ring::unit_inverse(&c))
            .map(XPoly::constant)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> TruncSeries<R> {
    /// Series of order `order` from the given leading coefficients; missing
    /// ones are zero and extra ones are dropped.
    pub fn new(order: usize, coeffs: Vec<R>) -> Self {
        let mut coeffs = coeffs;
        coeffs.resize(order + 1, R::zero());
        Self { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> R) -> Self {
        Self {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, vec![R::one()])
    }

    /// The series t (or 0 at order 0).
    pub fn t(order: usize) -> Self {
        Self::from_fn(order, |k| if k == 1 { R::one() } else { R::zero() })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    /// n! · [tⁿ], the value an exponential generating function assigns to n.
    pub fn egf_coeff(&self, n: usize) -> R {
        self.coeff(n) * &R::from_rational(&fact_q(n))
    }

    pub fn with_order(&self, order: usize) -> Self {
        Self::new(order, self.coeffs.clone())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TruncSeries<S> {
        TruncSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::from_fn(n, |k| self.coeffs[k].clone() + &other.coeffs[k])
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::from_fn(n, |k| self.coeffs[k].clone() - other.coeffs[k].clone())
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_fn(self.order(), |k| self.coeffs[k].clone() * c)
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![R::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                out[i + j] = out[i + j].clone() + &(a.clone() * b);
            }
        }
        Self { coeffs: out }
    }

    pub fn pow(&self, r: u32) -> Self {
        (0..r).fold(Self::one(self.order()), |acc, _| acc.mul(self))
    }

    /// Multiplicative inverse; requires a unit constant term.
    pub fn inverse(&self) -> Result<Self> {
        let inv0 = self.coeffs[0]
            .unit_inverse()
            .ok_or_else(|| Error::NonUnitConstant(format!("{:?}", self.coeffs[0])))?;
        let n = self.order();
        let mut out: Vec<R> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for m in 1..=n {
            let mut acc = R::zero();
            for i in 1..=m {
                acc = acc + &(self.coeffs[i].clone() * &out[m - i]);
            }
            out.push(-(acc * &inv0));
        }
        Ok(Self { coeffs: out })
    }

    /// Divides by t, dropping the (necessarily ignored) constant term.
    /// The order drops by one.
    pub fn div_t(&self) -> Self {
        Self {
            coeffs: if self.coeffs.len() > 1 {
                self.coeffs[1..].to_vec()
            } else {
                vec![R::zero()]
            },
        }
    }

    /// Multiplies by t, keeping the order.
    pub fn mul_t(&self) -> Self {
        Self::from_fn(self.order(), |k| {
            if k == 0 {
                R::zero()
            } else {
                self.coeffs[k - 1].clone()
            }
        })
    }
}

pub fn series_inverse<R: Ring>(f: &TruncSeries<R>) -> Result<TruncSeries<R>> {
    f.inverse()
}

pub fn series_pow<R: Ring>(f: &TruncSeries<R>, r: u32) -> TruncSeries<R> {
    f.pow(r)
}

/// e^{ct} = Σ c^k t^k / k!.
pub fn exp_series<R: Ring>(c: &R, order: usize) -> TruncSeries<R> {
    let mut pw = R::one();
    TruncSeries::from_fn(order, |k| {
        let term = pw.clone() * &R::from_rational(&fact_q(k).recip());
        pw = pw.clone() * c;
        term
    })
}

/// (e^t − 1)/t = Σ t^k/(k+1)!, over any ring.
pub fn exp_minus_one_over_t<R: Ring>(order: usize) -> TruncSeries<R> {
    TruncSeries::from_fn(order, |k| R::from_rational(&fact_q(k + 1).recip()))
}

/// t/(e^t − 1), the classical Bernoulli kernel.
pub fn bernoulli_kernel<R: Ring>(order: usize) -> TruncSeries<R> {
    exp_minus_one_over_t::<R>(order).inverse().expect("constant term is 1")
}
