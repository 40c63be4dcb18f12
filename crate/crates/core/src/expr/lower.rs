use super::{CallFamily, ExprAst};
use crate::error::{Error, Result};
use crate::families::{bernoulli_poly_order, euler_poly, genocchi_poly};
use crate::lambda_poly::LambdaPoly;
use crate::xpoly::XPoly;

pub const DEFAULT_MAX_DEGREE: u64 = 64;
pub const MAX_DEGREE_ENV: &str = "DEGBERN_MAX_DEGREE";

/// The degree guard: `DEGBERN_MAX_DEGREE` if set to an integer, else 64.
pub fn max_degree_from_env() -> u64 {
    std::env::var(MAX_DEGREE_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_DEGREE)
}

pub fn lower(ast: &ExprAst) -> Result<XPoly> {
    lower_with_limit(ast, max_degree_from_env())
}

/// Lowers to an exact polynomial, refusing inputs whose degree bound exceeds `max_degree`.
pub fn lower_with_limit(ast: &ExprAst, max_degree: u64) -> Result<XPoly> {
    check(ast, max_degree)?;
    Ok(build(ast))
}

// Every subexpression must fit too, e.g. (x^100)^0.
fn check(ast: &ExprAst, max: u64) -> Result<()> {
    let degree = ast.degree_bound();
    if degree > max {
        return Err(Error::DegreeLimit { degree, max });
    }
    match ast {
        ExprAst::Neg(a) | ExprAst::Pow(a, _) => check(a, max),
        ExprAst::Add(a, b) | ExprAst::Sub(a, b) | ExprAst::Mul(a, b) => {
            check(a, max)?;
            check(b, max)
        }
        ExprAst::Rational(_) | ExprAst::X | ExprAst::Lambda | ExprAst::Call { .. } => Ok(()),
    }
}

fn build(ast: &ExprAst) -> XPoly {
    match ast {
        ExprAst::Rational(q) => XPoly::constant(LambdaPoly::constant(q.clone())),
        ExprAst::X => XPoly::x(),
        ExprAst::Lambda => XPoly::constant(LambdaPoly::lambda()),
        ExprAst::Neg(a) => -build(a),
        ExprAst::Add(a, b) => build(a) + build(b),
        ExprAst::Sub(a, b) => build(a) - build(b),
        ExprAst::Mul(a, b) => build(a) * build(b),
        ExprAst::Pow(a, e) => build(a).pow(*e),
        ExprAst::Call { family, n, order } => {
            let n = *n as usize;
            match family {
                CallFamily::Bernoulli => bernoulli_poly_order(n, order.unwrap_or(1)),
                CallFamily::Euler => euler_poly(n),
                CallFamily::Genocchi => genocchi_poly(n),
            }
        }
    }
}
