//! Polynomials in the deformation parameter λ with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::format_rational;

/// Element of ℚ[λ], stored sparsely as exponent → nonzero coefficient.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LambdaPoly {
    terms: BTreeMap<u32, BigRational>,
}

impl LambdaPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// The generator λ.
    pub fn lambda() -> Self {
        Self::monomial(1, BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(exp: u32, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (u32, BigRational)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, exp: u32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree in λ; `None` stands for the −∞ degree of the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    /// Smallest λ-exponent carrying a nonzero coefficient.
    pub fn valuation(&self) -> Option<u32> {
        self.terms.keys().next().copied()
    }

    pub fn coeff(&self, exp: u32) -> BigRational {
        self.terms.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigRational)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// The value if this is a constant (including zero).
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.degree() {
            None => Some(BigRational::zero()),
            Some(0) => Some(self.coeff(0)),
            Some(_) => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.degree().is_none_or(|d| d == 0)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiplies by λ^k.
    pub fn shift_up(&self, k: u32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, v)| (e + k, v.clone())).collect(),
        }
    }

    /// Exact division by λ^k; fails if any term has exponent below `k`.
    pub fn div_lambda_pow(&self, k: u32) -> Result<Self> {
        if self.valuation().is_some_and(|v| v < k) {
            return Err(Error::NotDivisible {
                k,
                poly: self.to_string(),
            });
        }
        Ok(Self {
            terms: self.terms.iter().map(|(e, v)| (e - k, v.clone())).collect(),
        })
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluates at λ = s.
    pub fn eval(&self, s: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        let mut prev = match self.degree() {
            Some(d) => d,
            None => return acc,
        };
        for (e, c) in self.terms.iter().rev() {
            acc *= pow_rat(s, prev - e);
            acc += c;
            prev = *e;
        }
        acc * pow_rat(s, prev)
    }

    /// Renders in LaTeX with `\lambda`.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff = if abs.denom().is_one() {
                abs.numer().to_string()
            } else {
                format!("\\frac{{{}}}{{{}}}", abs.numer(), abs.denom())
            };
            match e {
                0 => out.push_str(&coeff),
                _ => {
                    if !abs.is_one() {
                        out.push_str(&coeff);
                    }
                    out.push_str("\\lambda");
                    if *e > 1 {
                        out.push_str(&format!("^{{{e}}}"));
                    }
                }
            }
        }
        out
    }
}

pub(crate) fn pow_rat(s: &BigRational, e: u32) -> BigRational {
    num_traits::pow::pow(s.clone(), e as usize)
}

/// Exact division of `p` by λ^k.
pub fn lpoly_divexact(p: &LambdaPoly, k: u32) -> Result<LambdaPoly> {
    p.div_lambda_pow(k)
}

impl From<BigRational> for LambdaPoly {
    fn from(c: BigRational) -> Self {
        Self::constant(c)
    }
}

impl fmt::Display for LambdaPoly {
    /// Surface syntax understood by the expression parser, λ spelled `l`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            match e {
                0 => f.write_str(&format_rational(&abs))?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{}*", format_rational(&abs))?;
                    }
                    f.write_str("l")?;
                    if *e > 1 {
                        write!(f, "^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LambdaPoly({self})")
    }
}

impl AddAssign<&LambdaPoly> for LambdaPoly {
    fn add_assign(&mut self, rhs: &LambdaPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LambdaPoly> for LambdaPoly {
    fn sub_assign(&mut self, rhs: &LambdaPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Add<&LambdaPoly> for &LambdaPoly {
    type Output = LambdaPoly;
    fn add(self, rhs: &LambdaPoly) -> LambdaPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LambdaPoly> for &LambdaPoly {
    type Output = LambdaPoly;
    fn sub(self, rhs: &LambdaPoly) -> LambdaPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LambdaPoly> for &LambdaPoly {
    type Output = LambdaPoly;
    fn mul(self, rhs: &LambdaPoly) -> LambdaPoly {
        let mut out = LambdaPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LambdaPoly {
    type Output = LambdaPoly;
    fn neg(self) -> LambdaPoly {
        LambdaPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Neg for LambdaPoly {
    type Output = LambdaPoly;
    fn neg(self) -> LambdaPoly {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($ty:ty, $tr:ident, $m:ident) => {
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a $ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &'a $ty) -> $ty {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<$ty> for &'a $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                self.$m(&rhs)
            }
        }
    };
}
pub(crate) use forward_owned_binop;

forward_owned_binop!(LambdaPoly, Add, add);
forward_owned_binop!(LambdaPoly, Sub, sub);
forward_owned_binop!(LambdaPoly, Mul, mul);
