use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::lexer::{tokenize, Tok};
use super::{CallFamily, ExprAst, ParseError, ParseErrorKind};

/// Nesting limit for parentheses and unary minus.
pub const MAX_DEPTH: usize = 256;

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    depth: usize,
}

type PResult<T> = Result<T, ParseError>;

pub fn parse(src: &str) -> PResult<ExprAst> {
    let mut p = Parser {
        toks: tokenize(src)?,
        pos: 0,
        end: src.len(),
        depth: 0,
    };
    if p.toks.is_empty() {
        return Err(p.error(ParseErrorKind::UnexpectedEnd));
    }
    let e = p.expr()?;
    match p.peek() {
        None => Ok(e),
        Some(Tok::RParen) => Err(p.error(ParseErrorKind::UnbalancedParens)),
        Some(Tok::Slash) => Err(p.error(ParseErrorKind::SymbolicDivision)),
        Some(t) => {
            let kind = ParseErrorKind::UnexpectedToken(t.describe());
            Err(p.error(kind))
        }
    }
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.1)
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            kind,
            offset: self.offset(),
        }
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.0.clone());
        self.pos += 1;
        t
    }

    fn descend(&mut self) -> PResult<()> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.error(ParseErrorKind::TooDeep));
        }
        Ok(())
    }

    fn expr(&mut self) -> PResult<ExprAst> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    lhs = ExprAst::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    lhs = ExprAst::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> PResult<ExprAst> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    lhs = ExprAst::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Tok::Slash) => return Err(self.error(ParseErrorKind::SymbolicDivision)),
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> PResult<ExprAst> {
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            self.descend()?;
            let inner = self.unary()?;
            self.depth -= 1;
            return Ok(ExprAst::Neg(Box::new(inner)));
        }
        self.power()
    }

    fn power(&mut self) -> PResult<ExprAst> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let e = match self.peek() {
            Some(Tok::Int(v)) => {
                let v = v.clone();
                self.bump();
                if self.peek() == Some(&Tok::Slash) {
                    return Err(self.error(ParseErrorKind::NonIntegerExponent));
                }
                v.to_u32().ok_or_else(|| self.error(ParseErrorKind::NumberTooLarge))?
            }
            None => return Err(self.error(ParseErrorKind::UnexpectedEnd)),
            Some(_) => return Err(self.error(ParseErrorKind::NonIntegerExponent)),
        };
        Ok(ExprAst::Pow(Box::new(base), e))
    }

    fn uint(&mut self) -> PResult<u32> {
        match self.bump() {
            Some(Tok::Int(v)) => v.to_u32().ok_or_else(|| {
                self.pos -= 1;
                self.error(ParseErrorKind::NumberTooLarge)
            }),
            Some(t) => {
                self.pos -= 1;
                Err(self.error(ParseErrorKind::UnexpectedToken(t.describe())))
            }
            None => Err(self.error(ParseErrorKind::UnexpectedEnd)),
        }
    }

    fn expect(&mut self, want: Tok) -> PResult<()> {
        match self.peek() {
            Some(t) if *t == want => {
                self.bump();
                Ok(())
            }
            None if want == Tok::RParen => Err(self.error(ParseErrorKind::UnbalancedParens)),
            None => Err(self.error(ParseErrorKind::UnexpectedEnd)),
            Some(t) => {
                let kind = ParseErrorKind::UnexpectedToken(t.describe());
                Err(self.error(kind))
            }
        }
    }

    fn atom(&mut self) -> PResult<ExprAst> {
        let at = self.offset();
        match self.bump() {
            Some(Tok::Int(n)) => {
                if self.peek() != Some(&Tok::Slash) {
                    return Ok(ExprAst::Rational(BigRational::from_integer(n)));
                }
                self.bump();
                let d: BigInt = match self.peek() {
                    Some(Tok::Int(d)) => d.clone(),
                    _ => return Err(self.error(ParseErrorKind::SymbolicDivision)),
                };
                if d.is_zero() {
                    return Err(self.error(ParseErrorKind::ZeroDenominator));
                }
                self.bump();
                Ok(ExprAst::Rational(BigRational::new(n, d)))
            }
            Some(Tok::X) => Ok(ExprAst::X),
            Some(Tok::Lambda) => Ok(ExprAst::Lambda),
            Some(Tok::Call(c)) => {
                let family = match c {
                    'B' => CallFamily::Bernoulli,
                    'E' => CallFamily::Euler,
                    _ => CallFamily::Genocchi,
                };
                self.expect(Tok::LParen)?;
                let n = self.uint()?;
                let mut order = None;
                if family == CallFamily::Bernoulli && self.peek() == Some(&Tok::Comma) {
                    self.bump();
                    order = Some(self.uint()?);
                }
                self.expect(Tok::RParen)?;
                Ok(ExprAst::Call { family, n, order })
            }
            Some(Tok::LParen) => {
                self.descend()?;
                let inner = self.expr()?;
                self.depth -= 1;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Some(Tok::RParen) => Err(ParseError {
                kind: ParseErrorKind::UnbalancedParens,
                offset: at,
            }),
            Some(t) => Err(ParseError {
                kind: ParseErrorKind::UnexpectedToken(t.describe()),
                offset: at,
            }),
            None => Err(self.error(ParseErrorKind::UnexpectedEnd)),
        }
    }
}
