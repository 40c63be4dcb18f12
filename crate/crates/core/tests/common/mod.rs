#![allow(dead_code)]

use degbern_core::{LambdaPoly, XPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rational(max: i64) -> impl Strategy<Value = BigRational> {
    (-max..=max, 1..=max).prop_map(|(n, d)| frac(n, d))
}

pub fn lambda_poly(max_deg: u32, max: i64) -> impl Strategy<Value = LambdaPoly> {
    prop::collection::vec((0..=max_deg, rational(max)), 0..=4).prop_map(LambdaPoly::from_terms)
}

pub fn lambda_free(max_deg: usize, max: i64) -> impl Strategy<Value = XPoly> {
    prop::collection::vec(rational(max), 1..=max_deg + 1).prop_map(XPoly::from_rationals)
}

pub fn with_lambda(max_deg: usize, max: i64) -> impl Strategy<Value = XPoly> {
    prop::collection::vec(lambda_poly(2, max), 1..=max_deg + 1).prop_map(XPoly::new)
}

/// Nonzero polynomial, λ-free or not.
pub fn nonzero_poly(max_deg: usize, max: i64) -> impl Strategy<Value = XPoly> {
    prop_oneof![lambda_free(max_deg, max), with_lambda(max_deg, max)].prop_filter("nonzero", |p| !p.is_zero())
}

/// Coefficients of `p` in a monic basis, by peeling off leading terms.
pub fn triangular_solve(p: &XPoly, basis: impl Fn(usize) -> XPoly) -> Vec<LambdaPoly> {
    let n = p.degree().expect("nonzero");
    let mut rest = p.clone();
    let mut out = vec![LambdaPoly::zero(); n + 1];
    for k in (0..=n).rev() {
        let b = basis(k);
        assert_eq!(b.degree(), Some(k));
        assert_eq!(b.leading_coeff(), LambdaPoly::one());
        let a = rest.coeff(k);
        rest = &rest - &b.scale(&a);
        out[k] = a;
    }
    assert!(rest.is_zero());
    out
}
