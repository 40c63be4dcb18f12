//! Power series acting on polynomials: as differential operators
//! (t^k xⁿ = (n)_k x^{n−k}) and as linear functionals ⟨f(t) | p(x)⟩.

use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;

use crate::families::lambda_bernoulli_kernel;
use crate::lambda_poly::LambdaPoly;
use crate::rational::{binom_q, fact_q, sign};
use crate::series::{exp_minus_one_over_t, exp_series, Ring, TruncSeries};
use crate::xpoly::XPoly;

type Generator = dyn Fn(usize) -> TruncSeries<LambdaPoly> + Send + Sync;

/// A power series in t over ℚ[λ] used as an operator.
///
/// It is stored as a generator producing the truncation at any requested
/// order, so application to a degree-n polynomial builds exactly t⁰..tⁿ.
#[derive(Clone)]
pub struct OperatorSeries {
    gen: Arc<Generator>,
}

impl fmt::Debug for OperatorSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OperatorSeries({:?})", self.series(4).coeffs())
    }
}

impl OperatorSeries {
    pub fn from_generator(gen: impl Fn(usize) -> TruncSeries<LambdaPoly> + Send + Sync + 'static) -> Self {
        Self { gen: Arc::new(gen) }
    }

    /// A fixed series, read as a polynomial in t (zero past its order).
    pub fn from_series(s: TruncSeries<LambdaPoly>) -> Self {
        Self::from_generator(move |n| s.with_order(n))
    }

    pub fn identity() -> Self {
        Self::from_generator(TruncSeries::one)
    }

    /// t^k.
    pub fn t_pow(k: usize) -> Self {
        Self::from_generator(move |n| {
            TruncSeries::from_fn(n, |i| if i == k { LambdaPoly::one() } else { LambdaPoly::zero() })
        })
    }

    /// e^{yt}, the shift by y.
    pub fn shift(y: LambdaPoly) -> Self {
        Self::from_generator(move |n| exp_series(&y, n))
    }

    /// (e^{yt} − 1)/t = Σ y^{k+1} t^k/(k+1)!, integration over [x, x+y].
    pub fn integral_over(y: LambdaPoly) -> Self {
        Self::from_generator(move |n| {
            let mut pw = y.clone();
            TruncSeries::from_fn(n, |k| {
                let c = pw.scale(&fact_q(k + 1).recip());
                pw = &pw * &y;
                c
            })
        })
    }

    /// (e^t − 1)/t, the operator I.
    pub fn integral() -> Self {
        Self::from_generator(exp_minus_one_over_t)
    }

    /// f(t) = (e^{λt} − 1)/λ = Σ_{k≥1} λ^{k−1} t^k / k!.
    pub fn degenerate_delta() -> Self {
        Self::from_generator(|n| {
            TruncSeries::from_fn(n, |k| match k {
                0 => LambdaPoly::zero(),
                _ => LambdaPoly::monomial(k as u32 - 1, fact_q(k).recip()),
            })
        })
    }

    /// (λt/(e^{λt} − 1))^a.
    pub fn lambda_bernoulli(a: u32) -> Self {
        Self::from_generator(move |n| lambda_bernoulli_kernel(n).pow(a))
    }

    /// g(t) = λ(e^t − 1)/(e^{λt} − 1) = ((e^t − 1)/t)·(λt/(e^{λt} − 1)).
    pub fn degenerate_g() -> Self {
        Self::integral().mul(&Self::lambda_bernoulli(1))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = (Arc::clone(&self.gen), Arc::clone(&other.gen));
        Self::from_generator(move |n| a(n).mul(&b(n)))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = (Arc::clone(&self.gen), Arc::clone(&other.gen));
        Self::from_generator(move |n| a(n).add(&b(n)))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (a, b) = (Arc::clone(&self.gen), Arc::clone(&other.gen));
        Self::from_generator(move |n| a(n).sub(&b(n)))
    }

    pub fn pow(&self, k: u32) -> Self {
        let a = Arc::clone(&self.gen);
        Self::from_generator(move |n| a(n).pow(k))
    }

    pub fn series(&self, order: usize) -> TruncSeries<LambdaPoly> {
        (self.gen)(order)
    }
}

/// f(t)p(x) = Σ_k [t^k]f · p^{(k)}(x).
pub fn apply(f: &OperatorSeries, p: &XPoly) -> XPoly {
    let Some(n) = p.degree() else {
        return XPoly::zero();
    };
    let s = f.series(n);
    let mut out = XPoly::zero();
    let mut deriv = p.clone();
    for c in s.coeffs() {
        if !Ring::is_zero(c) {
            out = &out + &deriv.scale(c);
        }
        deriv = deriv.derivative();
    }
    out
}

/// ⟨f(t) | p(x)⟩ = f(t)p(x) at x = 0.
pub fn functional(f: &OperatorSeries, p: &XPoly) -> LambdaPoly {
    apply(f, p).coeff(0)
}

/// Δ_a^n p(x) = Σ_i C(n,i)(−1)^{n−i} p(x + ia), with the step a ∈ ℚ[λ].
pub fn forward_diff(p: &XPoly, a: &LambdaPoly, n: usize) -> XPoly {
    let mut out = XPoly::zero();
    for i in 0..=n {
        let step = a.scale(&BigRational::from_integer(i.into()));
        let coef = binom_q(n, i) * sign(n - i);
        out = &out + &p.shift(&step).scale_rat(&coef);
    }
    out
}

/// I p(x) = ∫_x^{x+1} p(u) du.
pub fn integral_i(p: &XPoly) -> XPoly {
    let anti = p.antiderivative();
    &anti.shift(&LambdaPoly::one()) - &anti
}

/// I^m p.
pub fn integral_i_pow(p: &XPoly, m: usize) -> XPoly {
    (0..m).fold(p.clone(), |acc, _| integral_i(&acc))
}

/// ∫₀¹ p(u) du, with λ treated as a constant.
pub fn integral_01(p: &XPoly) -> LambdaPoly {
    p.antiderivative().eval_rational_x(&BigRational::from_integer(1.into()))
}

/// Umbral composition Σ b_i · family(i) for p(x) = Σ b_i xⁱ.
pub fn umbral_compose(p: &XPoly, family: impl Fn(usize) -> XPoly) -> XPoly {
    let mut out = XPoly::zero();
    for (i, b) in p.coeffs().iter().enumerate() {
        if !b.is_zero() {
            out = &out + &family(i).scale(b);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{bernoulli_number, bernoulli_poly, deg_bernoulli, deg_falling, scaled_bernoulli};
    use crate::rational::{frac, q};

    fn xp(c: &[i64]) -> XPoly {
        XPoly::from_rationals(c.iter().map(|&v| q(v)))
    }

    #[test]
    fn shift_operator_translates() {
        let p = xp(&[1, -3, 0, 2]);
        let y = LambdaPoly::from(frac(2, 5));
        assert_eq!(apply(&OperatorSeries::shift(y.clone()), &p), p.shift(&y));
    }

    #[test]
    fn identity_and_t_squared() {
        let p = xp(&[4, 0, 1, 7]);
        assert_eq!(apply(&OperatorSeries::identity(), &p), p);
        assert_eq!(apply(&OperatorSeries::t_pow(2), &xp(&[0, 0, 0, 1])), xp(&[0, 6]));
    }

    #[test]
    fn functional_on_monomials() {
        for n in 0..6 {
            for k in 0..6 {
                let v = functional(&OperatorSeries::t_pow(k), &XPoly::monomial(n, LambdaPoly::one()));
                let expected = if n == k { fact_q(n) } else { q(0) };
                assert_eq!(v, LambdaPoly::from(expected));
            }
        }
    }

    #[test]
    fn elementary_functionals() {
        let p = xp(&[3, -1, 0, 5]);
        let y = frac(3, 2);
        let ly = LambdaPoly::from(y.clone());
        assert_eq!(functional(&OperatorSeries::shift(ly.clone()), &p), p.eval(&ly));
        let integral = p.antiderivative().eval(&ly);
        assert_eq!(functional(&OperatorSeries::integral_over(ly), &p), integral);
    }

    #[test]
    fn forward_differences() {
        let p = xp(&[2, 5, 1]);
        assert_eq!(forward_diff(&p, &LambdaPoly::lambda(), 0), p);
        let d2 = forward_diff(&xp(&[0, 0, 1]), &LambdaPoly::lambda(), 2);
        assert_eq!(d2, XPoly::constant(LambdaPoly::monomial(2, q(2))));
        for n in 1..8 {
            let lhs = forward_diff(&deg_bernoulli(n), &LambdaPoly::one(), 1);
            assert_eq!(lhs, deg_falling(n - 1).scale_rat(&q(n as i64)));
        }
    }

    #[test]
    fn integral_operator() {
        assert_eq!(integral_i(&XPoly::one()), XPoly::one());
        assert_eq!(integral_i(&xp(&[0, 1])), XPoly::from_rationals([frac(1, 2), q(1)]));
        for n in 0..=8 {
            assert_eq!(integral_i(&bernoulli_poly(n)), XPoly::monomial(n, LambdaPoly::one()));
        }
    }

    #[test]
    fn unit_interval_integral() {
        assert_eq!(integral_01(&XPoly::one()), LambdaPoly::one());
        assert_eq!(integral_01(&xp(&[0, 1])), LambdaPoly::from(frac(1, 2)));
        let p = XPoly::monomial(2, LambdaPoly::lambda());
        assert_eq!(integral_01(&p), LambdaPoly::monomial(1, frac(1, 3)));
    }

    #[test]
    fn umbral_composition() {
        let p = xp(&[1, 2, 3]);
        assert_eq!(umbral_compose(&p, |i| XPoly::monomial(i, LambdaPoly::one())), p);
        let xn = XPoly::monomial(4, LambdaPoly::one());
        assert_eq!(umbral_compose(&xn, |i| scaled_bernoulli(i, 1)), scaled_bernoulli(4, 1));
        for n in 0..8 {
            let composed = umbral_compose(&bernoulli_poly(n), |i| scaled_bernoulli(i, 1));
            let expected = LambdaPoly::monomial(n as u32, bernoulli_number(n));
            assert_eq!(integral_01(&composed), expected, "n = {n}");
        }
    }

    #[test]
    fn delta_operator_is_scaled_difference() {
        let p = deg_bernoulli(5);
        let lhs = apply(&OperatorSeries::degenerate_delta(), &p);
        let diff = forward_diff(&p, &LambdaPoly::lambda(), 1);
        let rhs = XPoly::new(diff.coeffs().iter().map(|c| c.div_lambda_pow(1).unwrap()).collect());
        assert_eq!(lhs, rhs);
    }
}
