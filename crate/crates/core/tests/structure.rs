mod common;

use common::{frac, q};
use degbern_core::families::{
    bernoulli_number, bernoulli_poly_order, deg_bernoulli, deg_bernoulli_order, deg_falling, euler_number,
    genocchi_number, stirling2,
};
use degbern_core::rational::{binomial, factorial};
use degbern_core::umbral::{apply, forward_diff, functional, OperatorSeries};
use degbern_core::{LambdaPoly, XPoly};
use num_rational::BigRational;

fn one() -> LambdaPoly {
    LambdaPoly::one()
}

fn int(n: usize) -> BigRational {
    q(n as i64)
}

#[test]
fn unit_jump_at_one() {
    for n in 0..=12 {
        let b = deg_bernoulli(n);
        let jump = &b.eval(&one()) - &b.coeff(0);
        let expected = if n == 1 { one() } else { LambdaPoly::zero() };
        assert_eq!(jump, expected, "n={n}");
    }
}

#[test]
fn difference_is_falling_factorial() {
    for n in 1..=12 {
        let b = deg_bernoulli(n);
        let diff = &b.shift(&one()) - &b;
        assert_eq!(diff, deg_falling(n - 1).scale_rat(&int(n)), "n={n}");
    }
}

#[test]
fn delta_operator_lowers_index() {
    let f = OperatorSeries::degenerate_delta();
    for n in 0..=12 {
        let b = deg_bernoulli(n);
        let lowered = if n == 0 {
            XPoly::zero()
        } else {
            deg_bernoulli(n - 1).scale_rat(&int(n))
        };
        assert_eq!(apply(&f, &b), lowered, "n={n}");
        let step = forward_diff(&b, &LambdaPoly::lambda(), 1);
        let divided = XPoly::new(step.coeffs().iter().map(|c| c.div_lambda_pow(1).unwrap()).collect());
        assert_eq!(divided, lowered, "n={n}");
        let falling = if n == 0 {
            XPoly::zero()
        } else {
            deg_falling(n - 1).scale_rat(&int(n))
        };
        assert_eq!(apply(&f, &deg_falling(n)), falling, "n={n}");
    }
}

#[test]
fn higher_order_difference_and_g_operator() {
    let f = OperatorSeries::degenerate_delta();
    let g = OperatorSeries::degenerate_g();
    for r in 1..=4 {
        for n in 0..=8 {
            let b = deg_bernoulli_order(n, r);
            let lower_r = |m: usize| deg_bernoulli_order(m, r - 1);
            let expected = if n == 0 {
                XPoly::zero()
            } else {
                lower_r(n - 1).scale_rat(&int(n))
            };
            assert_eq!(&b.shift(&one()) - &b, expected, "r={r} n={n}");
            assert_eq!(apply(&g, &b), lower_r(n), "r={r} n={n}");
            let same_r = if n == 0 {
                XPoly::zero()
            } else {
                deg_bernoulli_order(n - 1, r).scale_rat(&int(n))
            };
            assert_eq!(apply(&f, &b), same_r, "r={r} n={n}");
        }
    }
}

#[test]
fn sheffer_orthogonality() {
    let f = OperatorSeries::degenerate_delta();
    let g = OperatorSeries::degenerate_g();
    for r in 0..=3 {
        let gr = g.pow(r);
        for k in 0..=6 {
            let op = f.pow(k as u32).mul(&gr);
            for n in 0..=6 {
                let v = functional(&op, &deg_bernoulli_order(n, r));
                let expected = if n == k {
                    LambdaPoly::constant(BigRational::from_integer(factorial(n)))
                } else {
                    LambdaPoly::zero()
                };
                assert_eq!(v, expected, "r={r} k={k} n={n}");
            }
        }
    }
}

// Both sides are polynomials in y of degree n, so agreement at n + 1 points is an identity.
#[test]
fn addition_formula() {
    for n in 0..=12 {
        let lhs_base = deg_bernoulli(n);
        let mut points: Vec<BigRational> = (0..=n as i64).map(q).collect();
        points.extend([frac(-7, 3), frac(5, 11), frac(-1, 2)]);
        for y in points {
            let ly = LambdaPoly::constant(y.clone());
            let lhs = lhs_base.shift(&ly);
            let mut rhs = XPoly::zero();
            for j in 0..=n {
                let c = BigRational::from_integer(binomial(n, j));
                let fall = deg_falling(n - j).eval_rational_x(&y);
                rhs = &rhs + &deg_bernoulli(j).scale(&fall.scale(&c));
            }
            assert_eq!(lhs, rhs, "n={n} y={y}");
        }
    }
}

#[test]
fn lambda_to_zero_gives_classical() {
    let zero = q(0);
    for r in 0..=4 {
        for n in 0..=12 {
            assert_eq!(
                deg_bernoulli_order(n, r).subst_lambda(&zero),
                bernoulli_poly_order(n, r),
                "r={r} n={n}"
            );
        }
    }
    for n in 0..=12 {
        assert_eq!(deg_falling(n).subst_lambda(&zero), XPoly::monomial(n, one()));
    }
}

#[test]
fn known_values() {
    assert_eq!(bernoulli_number(2), frac(1, 6));
    assert_eq!(bernoulli_number(12), frac(-691, 2730));
    assert_eq!(euler_number(7), frac(17, 8));
    assert_eq!(genocchi_number(10), q(-155));
    assert_eq!(
        deg_bernoulli(1).coeff(0),
        LambdaPoly::from_terms([(0, frac(-1, 2)), (1, frac(1, 2))])
    );
    assert_eq!(stirling2(4, 2), q(7));
}
