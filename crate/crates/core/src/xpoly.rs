//! Polynomials in x whose coefficients live in ℚ[λ].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::lambda_poly::{forward_owned_binop, LambdaPoly};
use crate::rational::{binom_q, format_rational};

/// Dense polynomial Σ c_i xⁱ; the last stored coefficient is never zero.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct XPoly {
    coeffs: Vec<LambdaPoly>,
}

impl XPoly {
    pub fn new(mut coeffs: Vec<LambdaPoly>) -> Self {
        while coeffs.last().is_some_and(LambdaPoly::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// From rational coefficients, constant term first.
    pub fn from_rationals<I: IntoIterator<Item = BigRational>>(coeffs: I) -> Self {
        Self::new(coeffs.into_iter().map(LambdaPoly::constant).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(LambdaPoly::one())
    }

    pub fn x() -> Self {
        Self::monomial(1, LambdaPoly::one())
    }

    pub fn constant(c: LambdaPoly) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(k: usize, c: LambdaPoly) -> Self {
        let mut coeffs = vec![LambdaPoly::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[LambdaPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> LambdaPoly {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading_coeff(&self) -> LambdaPoly {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_lambda_free(&self) -> bool {
        self.coeffs.iter().all(LambdaPoly::is_constant)
    }

    /// The constant polynomial value, if this has x-degree ≤ 0.
    pub fn as_constant(&self) -> Option<LambdaPoly> {
        match self.degree() {
            None => Some(LambdaPoly::zero()),
            Some(0) => Some(self.coeffs[0].clone()),
            Some(_) => None,
        }
    }

    pub fn scale(&self, c: &LambdaPoly) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn scale_rat(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.scale(c)).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&BigRational::from_integer(i.into())))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, l: usize) -> Self {
        (0..l).fold(self.clone(), |p, _| p.derivative())
    }

    /// The antiderivative vanishing at x = 0.
    pub fn antiderivative(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(LambdaPoly::zero());
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.scale(&BigRational::new(1.into(), (i as i64 + 1).into())));
        }
        Self::new(coeffs)
    }

    /// Evaluates at x = v for v ∈ ℚ[λ].
    pub fn eval(&self, v: &LambdaPoly) -> LambdaPoly {
        let mut acc = LambdaPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * v) + c;
        }
        acc
    }

    pub fn eval_rational_x(&self, x: &BigRational) -> LambdaPoly {
        self.eval(&LambdaPoly::constant(x.clone()))
    }

    /// Evaluates at (x, λ) = (x, s).
    pub fn eval_at(&self, x: &BigRational, s: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.eval(s);
        }
        acc
    }

    /// p(x + c) by binomial expansion, exact for symbolic shifts such as c = jλ.
    pub fn shift(&self, c: &LambdaPoly) -> Self {
        if c.is_zero() {
            return self.clone();
        }
        let n = self.coeffs.len();
        let mut out = vec![LambdaPoly::zero(); n];
        let mut powers = Vec::with_capacity(n);
        let mut pw = LambdaPoly::one();
        for _ in 0..n {
            powers.push(pw.clone());
            pw = &pw * c;
        }
        for (i, b) in self.coeffs.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            for j in 0..=i {
                let term = (b * &powers[i - j]).scale(&binom_q(i, j));
                out[j] += &term;
            }
        }
        Self::new(out)
    }

    /// Substitutes λ = s in every coefficient.
    pub fn subst_lambda(&self, s: &BigRational) -> Self {
        Self::from_rationals(self.coeffs.iter().map(|c| c.eval(s)))
    }

    /// Reinterprets a constant-in-λ polynomial as a polynomial in λ with x ↦ λ.
    pub fn x_as_lambda(&self) -> Option<LambdaPoly> {
        let mut out = LambdaPoly::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            out += &LambdaPoly::monomial(i as u32, c.as_constant()?);
        }
        Some(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// First nonzero monomial as `(x-exponent, λ-exponent, coefficient)`.
    pub fn first_term(&self) -> Option<(usize, u32, BigRational)> {
        self.coeffs
            .iter()
            .enumerate()
            .find_map(|(i, c)| c.terms().next().map(|(e, v)| (i, e, v.clone())))
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let xs = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{{{i}}}"),
            };
            let cs = c.to_latex();
            let term = if i == 0 {
                cs
            } else if c.is_one_const() {
                xs
            } else if (-c).is_one_const() {
                format!("-{xs}")
            } else if c.terms().count() == 1 {
                // a trailing control word would swallow the x
                let gap = if cs.ends_with("\\lambda") { " " } else { "" };
                format!("{cs}{gap}{xs}")
            } else {
                format!("\\left({cs}\\right){xs}")
            };
            parts.push(term);
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl LambdaPoly {
    fn is_one_const(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }
}

impl fmt::Display for XPoly {
    /// Canonical form accepted back by the expression parser.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let xs = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            match c.as_constant() {
                Some(r) => {
                    let neg = r.is_negative();
                    if first {
                        if neg {
                            f.write_str("-")?;
                        }
                    } else {
                        f.write_str(if neg { " - " } else { " + " })?;
                    }
                    let abs = r.abs();
                    if i == 0 {
                        f.write_str(&format_rational(&abs))?;
                    } else if abs.is_one() {
                        f.write_str(&xs)?;
                    } else {
                        write!(f, "{}*{xs}", format_rational(&abs))?;
                    }
                }
                None => {
                    if !first {
                        f.write_str(" + ")?;
                    }
                    if i == 0 {
                        write!(f, "({c})")?;
                    } else {
                        write!(f, "({c})*{xs}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XPoly({self})")
    }
}

impl From<LambdaPoly> for XPoly {
    fn from(c: LambdaPoly) -> Self {
        Self::constant(c)
    }
}

impl Add<&XPoly> for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::new((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl Sub<&XPoly> for &XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::new((0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl Mul<&XPoly> for &XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        if self.is_zero() || rhs.is_zero() {
            return XPoly::zero();
        }
        let mut out = vec![LambdaPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        XPoly::new(out)
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        -&self
    }
}

forward_owned_binop!(XPoly, Add, add);
forward_owned_binop!(XPoly, Sub, sub);
forward_owned_binop!(XPoly, Mul, mul);
