//! Builders for both sides of every identity in the corpus.
//!
//! Left sides are products and sums of classical polynomials; right sides are
//! the closed forms. The `*_beta` cases put the closed-form coefficients on
//! degenerate basis polynomials, and the `*_coeffs` cases compare those
//! coefficients with what the basis expansion computes, written as Σ a_k x^k.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::Params;
use crate::basis::{delta_lambda_zero_power, expand, expand_higher, FBranchRoute, GBranchRoute};
use crate::error::Result;
use crate::families::{
    bernoulli_number, bernoulli_poly, deg_bernoulli_order, euler_number, euler_poly, genocchi_number, genocchi_poly,
    harmonic0, scaled_bernoulli,
};
use crate::lambda_poly::LambdaPoly;
use crate::rational::{binom_q, fact_q, frac, q, rising_from, sign};
use crate::umbral::{apply, OperatorSeries};
use crate::xpoly::XPoly;

pub(super) struct Sides {
    pub lhs: XPoly,
    pub rhs: XPoly,
}

fn sides(lhs: XPoly, rhs: XPoly) -> Result<Sides> {
    Ok(Sides { lhs, rhs })
}

fn b(n: usize) -> BigRational {
    bernoulli_number(n)
}

fn e(n: usize) -> BigRational {
    euler_number(n)
}

fn g(n: usize) -> BigRational {
    genocchi_number(n)
}

fn h(n: usize) -> BigRational {
    harmonic0(n)
}

fn inv(n: usize) -> BigRational {
    frac(1, n as i64)
}

fn lam_pow(e: usize, c: BigRational) -> LambdaPoly {
    LambdaPoly::monomial(e as u32, c)
}

fn cst(c: BigRational) -> XPoly {
    XPoly::constant(LambdaPoly::constant(c))
}

/// Δ_λ^{k−1} 0^m / λ^{k−1}.
fn dz(k: usize, m: usize) -> Result<LambdaPoly> {
    delta_lambda_zero_power(k, m)
}

fn beta_sum(coeffs: &[LambdaPoly], r: u32) -> XPoly {
    coeffs
        .iter()
        .enumerate()
        .fold(XPoly::zero(), |acc, (k, a)| acc + deg_bernoulli_order(k, r).scale(a))
}

fn generating(coeffs: Vec<LambdaPoly>) -> XPoly {
    XPoly::new(coeffs)
}

fn conv(n: usize, family: impl Fn(usize) -> XPoly) -> XPoly {
    (1..n).fold(XPoly::zero(), |acc, k| {
        acc + (family(k) * family(n - k)).scale_rat(&inv(k * (n - k)))
    })
}

fn n_of(p: &Params) -> usize {
    p.value("n") as usize
}

fn mn_of(p: &Params) -> (usize, usize) {
    (p.value("m") as usize, p.value("n") as usize)
}

// Bernoulli convolutions over even indices, with and without the odd middle terms.

pub(super) fn one_a(p: &Params) -> Result<Sides> {
    one_a_impl(n_of(p), true)
}

pub(super) fn one_a_printed(p: &Params) -> Result<Sides> {
    one_a_impl(n_of(p), false)
}

fn one_a_impl(n: usize, odd_terms: bool) -> Result<Sides> {
    let big = 2 * n;
    let bp = bernoulli_poly;
    let mut lhs = XPoly::zero();
    for k in 1..n {
        lhs = lhs + (bp(2 * k) * bp(big - 2 * k)).scale_rat(&inv(2 * k * (big - 2 * k)));
    }
    let edge = frac(2, big as i64 - 1);
    lhs = lhs + (bp(1) * bp(big - 1)).scale_rat(&edge);
    if odd_terms {
        for j in (3..=big.saturating_sub(3)).step_by(2) {
            lhs = lhs + (bp(j) * bp(big - j)).scale_rat(&inv(j * (big - j)));
        }
    }
    let mut rhs = XPoly::zero();
    for k in 1..=n {
        let c = inv(n) * inv(2 * k) * binom_q(big, 2 * k) * b(2 * k);
        rhs = rhs + bp(big - 2 * k).scale_rat(&c);
    }
    rhs = rhs + bp(big).scale_rat(&(inv(n) * h(big - 1)));
    rhs = rhs + bp(1).scale_rat(&(edge * b(big - 1)));
    sides(lhs, rhs)
}

pub(super) fn miki(p: &Params) -> Result<Sides> {
    let n = n_of(p);
    let lhs: BigRational = (1..n)
        .map(|k| b(2 * k) * b(2 * n - 2 * k) * inv(2 * k * (2 * n - 2 * k)))
        .sum();
    let sum: BigRational = (1..=n)
        .map(|k| inv(2 * k) * binom_q(2 * n, 2 * k) * b(2 * k) * b(2 * n - 2 * k))
        .sum();
    let rhs = inv(n) * sum + inv(n) * h(2 * n - 1) * b(2 * n);
    sides(cst(lhs), cst(rhs))
}

/// B̄_n = (2^{1−n} − 1)B_n.
pub(super) fn bbar(n: usize) -> BigRational {
    let two_pow = BigRational::new(BigInt::from(2), BigInt::one() << n);
    (two_pow - BigRational::one()) * b(n)
}

pub(super) fn fpz(p: &Params) -> Result<Sides> {
    let n = n_of(p);
    let lhs: BigRational = (1..n)
        .map(|k| bbar(2 * k) * bbar(2 * n - 2 * k) * inv(2 * k * (2 * n - 2 * k)))
        .sum();
    let sum: BigRational = (1..=n)
        .map(|k| inv(2 * k) * binom_q(2 * n, 2 * k) * b(2 * k) * bbar(2 * n - 2 * k))
        .sum();
    let rhs = inv(n) * sum + inv(n) * h(2 * n - 1) * bbar(2 * n);
    sides(cst(lhs), cst(rhs))
}

// λ^{j+1}B_{j+1}(1/λ) is the scaled Bernoulli polynomial at x = 1.
pub(super) fn ex_a_polyid(p: &Params) -> Result<Sides> {
    let n = n_of(p);
    let one = q(1);
    let mut lhs = LambdaPoly::zero();
    for j in 0..=n {
        let c = binom_q(n, j) * b(n - j) * inv(j + 1);
        let scaled = scaled_bernoulli(j + 1, 1).eval_rational_x(&one);
        let term = scaled - lam_pow(j + 1, b(j + 1));
        lhs = lhs + term.scale(&c);
    }
    sides(XPoly::constant(lhs), XPoly::constant(lam_pow(n, b(n))))
}

fn ex_a_closed(n: usize) -> Result<Vec<LambdaPoly>> {
    let mut a = vec![lam_pow(n, b(n))];
    for k in 1..=n {
        a.push(dz(k, n - 1)?.scale(&(q(n as i64) / fact_q(k))));
    }
    Ok(a)
}

pub(super) fn ex_a(p: &Params) -> Result<Sides> {
    let n = n_of(p);
    sides(bernoulli_poly(n), beta_sum(&ex_a_closed(n)?, 1))
}

pub(super) fn ex_a_coeffs(p: &Params) -> Result<Sides> {
    let n = n_of(p);
    let found = expand(&bernoulli_poly(n))?;
    sides(generating(found.coefficients), generating(ex_a_closed(n)?))
}

// Convolution of Bernoulli polynomials.

pub(super) fn four_e(p: &Params) -> Result<Sides> {
    let n = n_of(p);
    let lhs = conv(n, bernoulli_poly);
    let mut rhs = XPoly::zero();
    for l in 0..=n - 2 {
        let c = frac(2, n as i64) * inv(n - l) * binom_q(n, l) * b(n - l);
        rhs = rhs + bernoulli_poly(l).scale_rat(&c);
    }
    rhs = rhs + bernoulli_poly(n).scale_rat(&(frac(2, n as i64) * h(n - 1)));
    sides(lhs, rhs)
}

fn ex_b_closed(n: usize) -> Result<Vec<LambdaPoly>> {
    let two_n = frac(2, n as i64);
    let mut a0 = lam_pow(n, h(n - 1) * b(n));
    for l in 0..=n - 2 {
        a0 = a0 + lam_pow(l, inv(n - l) * binom_q(n, l) * b(n - l) * b(l));
    }
    let mut a = vec![a0.scale(&two_n)];
    for k in 1..=n {
        let mut inner = dz(k, n - 1)?.scale(&(q(n as i64) * h(n - 1)));
        for l in 1..=n - 2 {
            let c = q(l as i64) * inv(n - l) * binom_q(n, l) * b(n - l);
            inner = inner + dz(k, l - 1)?.scale(&c);
        }
        a.push(inner.scale(&(two_n.clone() / fact_q(k))));
    }
    Ok(a)
}

pub(super) fn ex_b(p: &Params) -> Result<Sides> {
    let n = n_of(p);
    sides(conv(n, bernoulli_poly), beta_sum(&ex_b_closed(n)?, 1))
}

pub(super) fn ex_b_coeffs(p: &Params) -> Result<Sides> {
    let n = n_of(p);
    let found = expand(&conv(n, bernoulli_poly))?;
    sides(generating(found.coefficients), generating(ex_b_closed(n)?))
}

// Convolution of Euler polynomials.

fn euler_weight(n: usize, l: usize) -> BigRational {
    binom_q(n, l) * (h(n - 1) - h(n - l)) * inv(n - l + 1) * e(n - l + 1)
}

pub(super) fn ex_c(p: &Params) -> Result<Sides> {
    let n = n_of(p);
    let nn = n as i64;
    let mut rhs = cst(q(4) * e(n + 1) / q(nn * nn * (nn + 1)));
    for l in 1..=n {
        rhs = rhs - bernoulli_poly(l).scale_rat(&(frac(4, nn) * euler_weight(n, l)));
    }
    sides(conv(n, euler_poly), rhs)
}

fn ex_c_closed(n: usize) -> Result<Vec<LambdaPoly>> {
    let four_n = frac(4, n as i64);
    let mut a0 = LambdaPoly::constant(e(n + 1) * inv(n * (n + 1)));
    for l in 1..=n {
        a0 = a0 - lam_pow(l, euler_weight(n, l) * b(l));
    }
    let mut a = vec![a0.scale(&four_n)];
    for k in 1..=n {
        let mut inner = LambdaPoly::zero();
        for l in 1..=n {
            inner = inner + dz(k, l - 1)?.scale(&(q(l as i64) * euler_weight(n, l)));
        }
        a.push(inner.scale(&(-four_n.clone() / fact_q(k))));
    }
    Ok(a)
}

pub(super) fn ex_c_beta(p: &Params) -> Result<Sides> {
    let n = n_of(p);
    sides(conv(n, euler_poly), beta_sum(&ex_c_closed(n)?, 1))
}

pub(super) fn ex_c_coeffs(p: &Params) -> Result<Sides> {
    let n = n_of(p);
    let found = expand(&conv(n, euler_poly))?;
    sides(generating(found.coefficients), generating(ex_c_closed(n)?))
}

// Convolution of Genocchi polynomials.

fn genocchi_weight(n: usize, l: usize) -> BigRational {
    binom_q(n, l) * g(n - l) * inv(n - l)
}

fn genocchi_rhs(n: usize) -> XPoly {
    (0..=n - 2).fold(XPoly::zero(), |acc, l| {
        acc - bernoulli_poly(l).scale_rat(&(frac(4, n as i64) * genocchi_weight(n, l)))
    })
}

pub(super) fn seven_e(p: &Params) -> Result<Sides> {
    let n = n_of(p);
    sides(conv(n, genocchi_poly), genocchi_rhs(n))
}

fn ex_d_closed(n: usize) -> Result<Vec<LambdaPoly>> {
    let four_n = frac(4, n as i64);
    let a0 = (0..=n - 2).fold(LambdaPoly::zero(), |acc, l| {
        acc + lam_pow(l, genocchi_weight(n, l) * b(l))
    });
    let mut a = vec![a0.scale(&-four_n.clone())];
    for k in 1..=n - 2 {
        let mut inner = LambdaPoly::zero();
        for l in 1..=n - 2 {
            inner = inner + dz(k, l - 1)?.scale(&(q(l as i64) * genocchi_weight(n, l)));
        }
        a.push(inner.scale(&(-four_n.clone() / fact_q(k))));
    }
    Ok(a)
}

pub(super) fn ex_d(p: &Params) -> Result<Sides> {
    let n = n_of(p);
    sides(conv(n, genocchi_poly), beta_sum(&ex_d_closed(n)?, 1))
}

pub(super) fn ex_d_coeffs(p: &Params) -> Result<Sides> {
    let n = n_of(p);
    let found = expand(&conv(n, genocchi_poly))?;
    sides(generating(found.coefficients), generating(ex_d_closed(n)?))
}

// Products of two Bernoulli polynomials. The sum over r runs while m + n − 2r ≥ 1.

fn nielsen_b_weight(m: usize, n: usize, r: usize) -> BigRational {
    binom_q(m, 2 * r) * q(n as i64) + binom_q(n, 2 * r) * q(m as i64)
}

fn nielsen_b_tail(m: usize, n: usize) -> BigRational {
    sign(m + 1) * b(m + n) / binom_q(m + n, m)
}

pub(super) fn ex_e(p: &Params) -> Result<Sides> {
    let (m, n) = mn_of(p);
    let s = m + n;
    let mut rhs = cst(nielsen_b_tail(m, n));
    for r in 0..=(s - 1) / 2 {
        let c = nielsen_b_weight(m, n, r) * b(2 * r) * inv(s - 2 * r);
        rhs = rhs + bernoulli_poly(s - 2 * r).scale_rat(&c);
    }
    sides(bernoulli_poly(m) * bernoulli_poly(n), rhs)
}

fn ex_e_closed(m: usize, n: usize) -> Result<Vec<LambdaPoly>> {
    let s = m + n;
    let mut a0 = LambdaPoly::constant(nielsen_b_tail(m, n));
    for r in 0..=(s - 1) / 2 {
        let c = nielsen_b_weight(m, n, r) * b(2 * r) * b(s - 2 * r) * inv(s - 2 * r);
        a0 = a0 + lam_pow(s - 2 * r, c);
    }
    let mut a = vec![a0];
    for k in 1..=s {
        let mut inner = LambdaPoly::zero();
        for r in 0..=(s - 1) / 2 {
            inner = inner + dz(k, s - 2 * r - 1)?.scale(&(nielsen_b_weight(m, n, r) * b(2 * r)));
        }
        a.push(inner.scale(&fact_q(k).recip()));
    }
    Ok(a)
}

pub(super) fn ex_e_beta(p: &Params) -> Result<Sides> {
    let (m, n) = mn_of(p);
    sides(bernoulli_poly(m) * bernoulli_poly(n), beta_sum(&ex_e_closed(m, n)?, 1))
}

pub(super) fn ex_e_coeffs(p: &Params) -> Result<Sides> {
    let (m, n) = mn_of(p);
    let found = expand(&(bernoulli_poly(m) * bernoulli_poly(n)))?;
    sides(generating(found.coefficients), generating(ex_e_closed(m, n)?))
}

// Products of two Euler polynomials.

fn nielsen_e_tail(m: usize, n: usize) -> BigRational {
    fact_q(m) * fact_q(n) / fact_q(m + n + 1) * e(m + n + 1)
}

/// Pairs (i, C(deg, i)E_i) for both inner sums.
fn nielsen_e_terms(m: usize, n: usize) -> Vec<(usize, BigRational)> {
    let left = (1..=m).map(|r| (r, binom_q(m, r) * e(r)));
    let right = (1..=n).map(|s| (s, binom_q(n, s) * e(s)));
    left.chain(right).collect()
}

pub(super) fn ex_f(p: &Params) -> Result<Sides> {
    let (m, n) = mn_of(p);
    let mut rhs = cst(q(2) * sign(n + 1) * nielsen_e_tail(m, n));
    for (i, w) in nielsen_e_terms(m, n) {
        let deg = m + n - i + 1;
        rhs = rhs + bernoulli_poly(deg).scale_rat(&(q(-2) * w * inv(deg)));
    }
    sides(euler_poly(m) * euler_poly(n), rhs)
}

fn ex_f_closed(m: usize, n: usize) -> Result<Vec<LambdaPoly>> {
    let mut a0 = LambdaPoly::constant(sign(n) * nielsen_e_tail(m, n));
    for (i, w) in nielsen_e_terms(m, n) {
        let deg = m + n - i + 1;
        a0 = a0 + lam_pow(deg, w * b(deg) * inv(deg));
    }
    let mut a = vec![a0.scale(&q(-2))];
    for k in 1..=m + n {
        let mut inner = LambdaPoly::zero();
        for (i, w) in nielsen_e_terms(m, n) {
            inner = inner + dz(k, m + n - i)?.scale(&w);
        }
        a.push(inner.scale(&(q(-2) / fact_q(k))));
    }
    Ok(a)
}

pub(super) fn ex_f_beta(p: &Params) -> Result<Sides> {
    let (m, n) = mn_of(p);
    sides(euler_poly(m) * euler_poly(n), beta_sum(&ex_f_closed(m, n)?, 1))
}

pub(super) fn ex_f_coeffs(p: &Params) -> Result<Sides> {
    let (m, n) = mn_of(p);
    let found = expand(&(euler_poly(m) * euler_poly(n)))?;
    sides(generating(found.coefficients), generating(ex_f_closed(m, n)?))
}

// Powers of the integral operator on scaled higher-order Bernoulli polynomials.

pub(super) fn eight_e(p: &Params) -> Result<Sides> {
    let (n, r, a) = (n_of(p), p.value("r"), p.value("a") as usize);
    let lhs = apply(&OperatorSeries::integral().pow(a as u32), &scaled_bernoulli(n, r));
    let top = scaled_bernoulli(n + a, r);
    let mut rhs = XPoly::zero();
    for m in 0..=a {
        let c = sign(a - m) * binom_q(a, m);
        rhs = rhs + top.shift(&LambdaPoly::constant(q(m as i64))).scale_rat(&c);
    }
    let rising = BigRational::from_integer(rising_from(n, a));
    sides(lhs, rhs.scale_rat(&rising.recip()))
}

// Genocchi convolution in the order-r basis.

fn ex_g_closed(n: usize, r: u32) -> Result<Vec<LambdaPoly>> {
    let ru = r as usize;
    let mut a = Vec::new();
    for k in 0..ru {
        let c = ru - k - 1;
        let mut acc = LambdaPoly::zero();
        for j in 0..=k {
            for l in 0..=n - 2 {
                let rising = BigRational::from_integer(rising_from(l, c));
                let base = binom_q(k, j) * genocchi_weight(n, l) / rising;
                let fam = scaled_bernoulli(l + c, r - k as u32);
                for m in 0..=c {
                    let w = sign(ru - j - m - 1) * binom_q(c, m) * base.clone();
                    acc = acc + fam.eval_rational_x(&q((j + m) as i64)).scale(&w);
                }
            }
        }
        a.push(acc.scale(&(frac(-4, n as i64) / fact_q(k))));
    }
    for k in ru..=n - 2 {
        let mut acc = LambdaPoly::zero();
        for j in 0..=ru {
            for l in 0..=k - ru {
                let point = LambdaPoly::from_terms([(0, q(j as i64)), (1, q(l as i64))]);
                let w = sign(k - j - l) * binom_q(ru, j) * binom_q(k - ru, l);
                for m in 1..n {
                    let gg = genocchi_poly(m).eval(&point) * genocchi_poly(n - m).eval(&point);
                    acc = acc + gg.scale(&(w.clone() * inv(m * (n - m))));
                }
            }
        }
        a.push(acc.div_lambda_pow((k - ru) as u32)?.scale(&fact_q(k).recip()));
    }
    Ok(a)
}

pub(super) fn ex_g(p: &Params) -> Result<Sides> {
    let (n, r) = (n_of(p), p.value("r"));
    sides(conv(n, genocchi_poly), beta_sum(&ex_g_closed(n, r)?, r))
}

pub(super) fn ex_g_coeffs(p: &Params) -> Result<Sides> {
    let (n, r) = (n_of(p), p.value("r"));
    let found = expand_higher(
        &conv(n, genocchi_poly),
        r,
        GBranchRoute::UmbralIntegralOp,
        FBranchRoute::DeltaLambda,
    )?;
    sides(generating(found.coefficients), generating(ex_g_closed(n, r)?))
}
