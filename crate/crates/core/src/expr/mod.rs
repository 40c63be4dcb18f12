//! Polynomial expressions in `x` and `l` (for λ), with Bernoulli, Euler and
//! Genocchi polynomial calls.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' uint)?
//! atom   := int ('/' int)? | 'x' | 'l' | call | '(' expr ')'
//! call   := ('B' | 'E' | 'G') '(' uint (',' uint)? ')'
//! ```
//!
//! `^` binds tighter than unary minus, so `-x^2` is `-(x^2)`. Division only
//! forms rational literals; there is no implicit multiplication.

mod lexer;
mod lower;
mod parser;

use std::fmt;

use num_rational::BigRational;
use thiserror::Error;

pub use lower::{lower, lower_with_limit, max_degree_from_env, DEFAULT_MAX_DEGREE, MAX_DEGREE_ENV};
pub use parser::{parse, MAX_DEPTH};

use crate::error::Result;
use crate::xpoly::XPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CallFamily {
    /// `B(n)` or `B(n, r)`
    Bernoulli,
    Euler,
    Genocchi,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprAst {
    Rational(BigRational),
    X,
    Lambda,
    Neg(Box<ExprAst>),
    Add(Box<ExprAst>, Box<ExprAst>),
    Sub(Box<ExprAst>, Box<ExprAst>),
    Mul(Box<ExprAst>, Box<ExprAst>),
    Pow(Box<ExprAst>, u32),
    Call {
        family: CallFamily,
        n: u32,
        order: Option<u32>,
    },
}

impl ExprAst {
    /// Upper bound on the x-degree of the lowered polynomial.
    pub fn degree_bound(&self) -> u64 {
        match self {
            ExprAst::Rational(_) | ExprAst::Lambda => 0,
            ExprAst::X => 1,
            ExprAst::Neg(a) => a.degree_bound(),
            ExprAst::Add(a, b) | ExprAst::Sub(a, b) => a.degree_bound().max(b.degree_bound()),
            ExprAst::Mul(a, b) => a.degree_bound().saturating_add(b.degree_bound()),
            ExprAst::Pow(a, e) => a.degree_bound().saturating_mul(u64::from(*e)),
            ExprAst::Call { n, .. } => u64::from(*n),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnknownIdentifier(String),
    UnexpectedToken(String),
    UnexpectedEnd,
    UnbalancedParens,
    NonIntegerExponent,
    SymbolicDivision,
    ZeroDenominator,
    NumberTooLarge,
    TooDeep,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::UnexpectedChar(c) => write!(f, "unexpected character `{c}`"),
            Self::UnknownIdentifier(s) => write!(f, "unknown identifier `{s}`"),
            Self::UnexpectedToken(t) => write!(f, "unexpected {t}"),
            Self::UnexpectedEnd => f.write_str("unexpected end of input"),
            Self::UnbalancedParens => f.write_str("unbalanced parentheses"),
            Self::NonIntegerExponent => f.write_str("non-integer exponent"),
            Self::SymbolicDivision => f.write_str("division is only allowed inside rational literals"),
            Self::ZeroDenominator => f.write_str("zero denominator"),
            Self::NumberTooLarge => f.write_str("number too large"),
            Self::TooDeep => f.write_str("expression nested too deeply"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{kind} at byte {offset}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub offset: usize,
}

/// Parses and lowers in one step, with the degree guard read from the environment.
pub fn parse_poly(src: &str) -> Result<XPoly> {
    lower(&parse(src)?)
}
