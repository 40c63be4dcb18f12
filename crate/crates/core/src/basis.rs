//! Expansion of a polynomial in the degenerate Bernoulli basis β_{k,λ}(x)
//! and in the higher-order basis β^{(r)}_{k,λ}(x).
//!
//! With f(t) = (e^{λt} − 1)/λ and g(t) = λ(e^t − 1)/(e^{λt} − 1), the
//! sequence β^{(r)}_{n,λ}(x) is Sheffer for (g(t)^r, f(t)), so
//!
//! ```text
//! a_k = ⟨f(t)^k g(t)^r | p(x)⟩ / k!
//! ```
//!
//! Every route below is a different way of evaluating that functional
//! without leaving ℚ[λ]. Divisions by powers of λ are exact; a remainder is
//! reported as [`Error::NotDivisible`].

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::families::{deg_bernoulli, deg_bernoulli_order, scaled_bernoulli, stirling2};
use crate::lambda_poly::LambdaPoly;
use crate::rational::{binom_q, fact_q, sign};
use crate::umbral::{forward_diff, functional, integral_01, integral_i_pow, umbral_compose, OperatorSeries};
use crate::xpoly::XPoly;

/// Routes for a_k, k ≥ 1, of the order-1 expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoefficientRoute {
    /// ⟨f(t)^{k−1} | Δp(x)⟩ / k!
    Functional,
    /// Δ_λ^{k−1}Δp(0) / (k! λ^{k−1})
    DeltaLambda,
    /// Σ_j C(k−1,j)(−1)^{k−1−j}(p(1+jλ) − p(jλ)) / (k! λ^{k−1})
    BinomialSum,
    /// (1/k) Σ_l S₂(l,k−1) λ^{l−k+1}/l! (p^{(l)}(1) − p^{(l)}(0))
    StirlingSum,
}

/// Routes for a_0 of the order-1 expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConstantRoute {
    /// ∫₀¹ p(λB(u/λ)) du
    UmbralIntegral,
    /// ⟨g(t) | p(x)⟩
    OperatorFunctional,
    /// p(0) − Σ_{k≥1} a_k β_{k,λ}(0)
    Residual,
}

/// Realizations of g(t)^m p(x) at x = j, used for k < r.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GBranchRoute {
    /// I^m applied to p(λB^{(m)}(x/λ))
    UmbralIntegralOp,
    /// Σ_l S₂(l+m,m) m!/(l+m)! · d^l/dx^l p(λB^{(m)}(x/λ))
    StirlingOp,
}

/// Realizations of f(t)^m p(x) at x = j, used for k ≥ r.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FBranchRoute {
    /// λ^{−m} Δ_λ^m p(j)
    DeltaLambda,
    /// m! Σ_l S₂(l,m) λ^{l−m}/l! p^{(l)}(j)
    StirlingSum,
}

impl CoefficientRoute {
    pub const ALL: [Self; 4] = [
        Self::Functional,
        Self::DeltaLambda,
        Self::BinomialSum,
        Self::StirlingSum,
    ];
}

impl ConstantRoute {
    pub const ALL: [Self; 3] = [Self::UmbralIntegral, Self::OperatorFunctional, Self::Residual];
}

impl GBranchRoute {
    pub const ALL: [Self; 2] = [Self::UmbralIntegralOp, Self::StirlingOp];
}

impl FBranchRoute {
    pub const ALL: [Self; 2] = [Self::DeltaLambda, Self::StirlingSum];
}

/// Which formula produced a coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Constant(ConstantRoute),
    Coefficient(CoefficientRoute),
    GBranch(GBranchRoute),
    FBranch(FBranchRoute),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Constant(r) => write!(f, "a0:{r:?}"),
            Provenance::Coefficient(r) => write!(f, "ak:{r:?}"),
            Provenance::GBranch(r) => write!(f, "g:{r:?}"),
            Provenance::FBranch(r) => write!(f, "f:{r:?}"),
        }
    }
}

/// p(x) = Σ_k a_k β^{(r)}_{k,λ}(x).
#[derive(Clone, Debug, PartialEq)]
pub struct BasisExpansion {
    pub order: u32,
    pub coefficients: Vec<LambdaPoly>,
    pub provenance: Vec<Provenance>,
    pub source: XPoly,
}

impl BasisExpansion {
    /// Expansion with explicit coefficients and no recorded route.
    pub fn from_coefficients(order: u32, coefficients: Vec<LambdaPoly>) -> Self {
        let source = reconstruct_coefficients(order, &coefficients);
        Self {
            order,
            provenance: Vec::new(),
            coefficients,
            source,
        }
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn coefficient(&self, k: usize) -> LambdaPoly {
        self.coefficients.get(k).cloned().unwrap_or_default()
    }
}

fn lam() -> LambdaPoly {
    LambdaPoly::lambda()
}

fn int(v: usize) -> LambdaPoly {
    LambdaPoly::constant(BigRational::from_integer(v.into()))
}

fn nonzero_degree(p: &XPoly) -> Result<usize> {
    p.degree().ok_or(Error::ZeroPolynomial)
}

/// a_k for k ≥ 1 of the order-1 expansion.
pub fn t31_coefficient(p: &XPoly, k: usize, route: CoefficientRoute) -> Result<LambdaPoly> {
    assert!(k >= 1, "a_0 has its own routes");
    let n = p.degree().unwrap_or(0);
    let km1 = k - 1;
    let inv_kfact = fact_q(k).recip();
    let value = match route {
        CoefficientRoute::Functional => {
            let h = &p.shift(&LambdaPoly::one()) - p;
            let f_pow = OperatorSeries::degenerate_delta().pow(km1 as u32);
            functional(&f_pow, &h).scale(&inv_kfact)
        }
        CoefficientRoute::DeltaLambda => {
            let h = &p.shift(&LambdaPoly::one()) - p;
            let diff = forward_diff(&h, &lam(), km1).coeff(0);
            diff.div_lambda_pow(km1 as u32)?.scale(&inv_kfact)
        }
        CoefficientRoute::BinomialSum => {
            let mut acc = LambdaPoly::zero();
            for j in 0..=km1 {
                let jl = lam().scale(&BigRational::from_integer(j.into()));
                let h = &p.eval(&(&LambdaPoly::one() + &jl)) - &p.eval(&jl);
                acc += &h.scale(&(binom_q(km1, j) * sign(km1 - j)));
            }
            acc.div_lambda_pow(km1 as u32)?.scale(&inv_kfact)
        }
        CoefficientRoute::StirlingSum => {
            let mut acc = LambdaPoly::zero();
            let mut deriv = p.nth_derivative(km1);
            for l in km1..=n {
                let jump = &deriv.eval(&LambdaPoly::one()) - &deriv.coeff(0);
                let c = stirling2(l, km1) * fact_q(l).recip();
                acc += &(&jump * &LambdaPoly::monomial((l - km1) as u32, c));
                deriv = deriv.derivative();
            }
            acc.scale(&BigRational::new(1.into(), (k as i64).into()))
        }
    };
    Ok(value)
}

/// a_0 of the order-1 expansion. The residual route needs a_1..a_n.
fn t31_constant(p: &XPoly, route: ConstantRoute, rest: &[LambdaPoly]) -> LambdaPoly {
    match route {
        ConstantRoute::UmbralIntegral => integral_01(&umbral_compose(p, |i| scaled_bernoulli(i, 1))),
        ConstantRoute::OperatorFunctional => functional(&OperatorSeries::degenerate_g(), p),
        ConstantRoute::Residual => {
            let mut acc = p.coeff(0);
            for (k, a) in rest.iter().enumerate() {
                acc -= &(a * &deg_bernoulli(k + 1).coeff(0));
            }
            acc
        }
    }
}

/// Expansion in β_{k,λ}(x) using the chosen routes for a_k and a_0.
pub fn expand_t31(p: &XPoly, route_ak: CoefficientRoute, route_a0: ConstantRoute) -> Result<BasisExpansion> {
    let n = nonzero_degree(p)?;
    let rest = (1..=n)
        .map(|k| t31_coefficient(p, k, route_ak))
        .collect::<Result<Vec<_>>>()?;
    let a0 = t31_constant(p, route_a0, &rest);
    let mut coefficients = vec![a0];
    coefficients.extend(rest);
    let mut provenance = vec![Provenance::Constant(route_a0)];
    provenance.extend(std::iter::repeat_n(Provenance::Coefficient(route_ak), n));
    Ok(BasisExpansion {
        order: 1,
        coefficients,
        provenance,
        source: p.clone(),
    })
}

/// Default routes: binomial sums for a_k and the umbral integral for a_0.
pub fn expand(p: &XPoly) -> Result<BasisExpansion> {
    expand_t31(p, CoefficientRoute::BinomialSum, ConstantRoute::UmbralIntegral)
}

/// g(t)^m p(x) at x = j.
pub fn g_power_at(p: &XPoly, m: u32, j: usize, route: GBranchRoute) -> LambdaPoly {
    let composed = umbral_compose(p, |i| scaled_bernoulli(i, m));
    let at = int(j);
    match route {
        GBranchRoute::UmbralIntegralOp => integral_i_pow(&composed, m as usize).eval(&at),
        GBranchRoute::StirlingOp => {
            let n = p.degree().unwrap_or(0);
            let m = m as usize;
            let mut acc = LambdaPoly::zero();
            let mut deriv = composed;
            for l in 0..=n {
                let c = stirling2(l + m, m) * fact_q(m) * fact_q(l + m).recip();
                acc += &deriv.eval(&at).scale(&c);
                deriv = deriv.derivative();
            }
            acc
        }
    }
}

/// f(t)^m p(x) at x = j.
pub fn f_power_at(p: &XPoly, m: usize, j: usize, route: FBranchRoute) -> Result<LambdaPoly> {
    let at = int(j);
    match route {
        FBranchRoute::DeltaLambda => {
            let mut acc = LambdaPoly::zero();
            for l in 0..=m {
                let point = &at + &lam().scale(&BigRational::from_integer(l.into()));
                acc += &p.eval(&point).scale(&(binom_q(m, l) * sign(m - l)));
            }
            acc.div_lambda_pow(m as u32)
        }
        FBranchRoute::StirlingSum => {
            let n = p.degree().unwrap_or(0);
            let mut acc = LambdaPoly::zero();
            let mut deriv = p.nth_derivative(m);
            for l in m..=n {
                let c = fact_q(m) * stirling2(l, m) * fact_q(l).recip();
                acc += &(&deriv.eval(&at) * &LambdaPoly::monomial((l - m) as u32, c));
                deriv = deriv.derivative();
            }
            Ok(acc)
        }
    }
}

/// a_k of the order-r expansion: the g-branch for k < r, the f-branch otherwise.
pub fn higher_coefficient(
    p: &XPoly,
    r: u32,
    k: usize,
    g_route: GBranchRoute,
    f_route: FBranchRoute,
) -> Result<(LambdaPoly, Provenance)> {
    let ru = r as usize;
    let mut acc = LambdaPoly::zero();
    let prov = if k < ru {
        for j in 0..=k {
            let c = binom_q(k, j) * sign(k - j);
            acc += &g_power_at(p, r - k as u32, j, g_route).scale(&c);
        }
        Provenance::GBranch(g_route)
    } else {
        for j in 0..=ru {
            let c = binom_q(ru, j) * sign(ru - j);
            acc += &f_power_at(p, k - ru, j, f_route)?.scale(&c);
        }
        Provenance::FBranch(f_route)
    };
    Ok((acc.scale(&fact_q(k).recip()), prov))
}

/// Expansion in β^{(r)}_{k,λ}(x), r ≥ 1.
pub fn expand_higher(p: &XPoly, r: u32, g_route: GBranchRoute, f_route: FBranchRoute) -> Result<BasisExpansion> {
    if r == 0 {
        return Err(Error::InvalidArgument("order r must be at least 1".into()));
    }
    let n = nonzero_degree(p)?;
    let (coefficients, provenance) = (0..=n)
        .map(|k| higher_coefficient(p, r, k, g_route, f_route))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .unzip();
    Ok(BasisExpansion {
        order: r,
        coefficients,
        provenance,
        source: p.clone(),
    })
}

/// a_k = ⟨f(t)^k g(t)^r | p(x)⟩ / k!, straight from the Sheffer condition.
pub fn functional_coefficient(p: &XPoly, r: u32, k: usize) -> LambdaPoly {
    let op = OperatorSeries::degenerate_delta()
        .pow(k as u32)
        .mul(&OperatorSeries::degenerate_g().pow(r));
    functional(&op, p).scale(&fact_q(k).recip())
}

fn reconstruct_coefficients(order: u32, coefficients: &[LambdaPoly]) -> XPoly {
    let mut out = XPoly::zero();
    for (k, a) in coefficients.iter().enumerate() {
        if !a.is_zero() {
            out = &out + &deg_bernoulli_order(k, order).scale(a);
        }
    }
    out
}

/// Σ_k a_k β^{(r)}_{k,λ}(x).
pub fn reconstruct(e: &BasisExpansion) -> XPoly {
    reconstruct_coefficients(e.order, &e.coefficients)
}

/// Coefficients at λ = 0; only meaningful for a λ-free source polynomial.
pub fn classical_limit(e: &BasisExpansion) -> Result<Vec<BigRational>> {
    if !e.source.is_lambda_free() {
        return Err(Error::LambdaDependent(e.source.to_string()));
    }
    Ok(e.coefficients.iter().map(|a| a.coeff(0)).collect())
}

fn lambda_free_rational(p: &XPoly) -> Result<Vec<BigRational>> {
    p.coeffs()
        .iter()
        .map(|c| c.as_constant().ok_or_else(|| Error::LambdaDependent(p.to_string())))
        .collect()
}

fn eval_q(p: &XPoly, x: i64) -> BigRational {
    p.eval_at(&BigRational::from_integer(x.into()), &BigRational::zero())
}

/// Coefficients of p in the classical Bernoulli basis B_k(x):
/// a_0 = ∫₀¹ p, a_k = (p^{(k−1)}(1) − p^{(k−1)}(0))/k!.
pub fn classical_bernoulli_coefficients(p: &XPoly) -> Result<Vec<BigRational>> {
    lambda_free_rational(p)?;
    let n = nonzero_degree(p)?;
    let mut out = vec![integral_01(p).coeff(0)];
    let mut deriv = p.clone();
    for k in 1..=n {
        out.push((eval_q(&deriv, 1) - eval_q(&deriv, 0)) * fact_q(k).recip());
        deriv = deriv.derivative();
    }
    Ok(out)
}

/// Coefficients of p in the classical basis B^{(r)}_k(x): the g-branch
/// Σ_j C(k,j)(−1)^{k−j} I^{r−k}p(j)/k! for k < r and the f-branch
/// Σ_j C(r,j)(−1)^{r−j} p^{(k−r)}(j)/k! for k ≥ r.
pub fn classical_higher_coefficients(p: &XPoly, r: u32) -> Result<Vec<BigRational>> {
    lambda_free_rational(p)?;
    let n = nonzero_degree(p)?;
    let ru = r as usize;
    let mut out = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut acc = BigRational::zero();
        if k < ru {
            let ip = integral_i_pow(p, ru - k);
            for j in 0..=k {
                acc += binom_q(k, j) * sign(k - j) * eval_q(&ip, j as i64);
            }
        } else {
            let d = p.nth_derivative(k - ru);
            for j in 0..=ru {
                acc += binom_q(ru, j) * sign(ru - j) * eval_q(&d, j as i64);
            }
        }
        out.push(acc * fact_q(k).recip());
    }
    Ok(out)
}

/// Runs every route and returns the first disagreement, if any.
pub fn crosscheck(p: &XPoly, r: u32) -> Result<Option<RouteDisagreement>> {
    let reference = if r == 1 {
        expand(p)?
    } else {
        expand_higher(p, r, GBranchRoute::UmbralIntegralOp, FBranchRoute::DeltaLambda)?
    };
    let mut candidates = Vec::new();
    if r == 1 {
        for ak in CoefficientRoute::ALL {
            for a0 in ConstantRoute::ALL {
                candidates.push((format!("{ak:?}/{a0:?}"), expand_t31(p, ak, a0)?));
            }
        }
    }
    for g in GBranchRoute::ALL {
        for f in FBranchRoute::ALL {
            candidates.push((format!("{g:?}/{f:?}"), expand_higher(p, r, g, f)?));
        }
    }
    for (name, cand) in candidates {
        for (k, (a, b)) in reference.coefficients.iter().zip(&cand.coefficients).enumerate() {
            if a != b {
                return Ok(Some(RouteDisagreement {
                    k,
                    route: name,
                    expected: a.clone(),
                    found: b.clone(),
                }));
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq)]
pub struct RouteDisagreement {
    pub k: usize,
    pub route: String,
    pub expected: LambdaPoly,
    pub found: LambdaPoly,
}

impl fmt::Display for RouteDisagreement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "route {} disagrees at a_{}: expected {}, found {}",
            self.route, self.k, self.expected, self.found
        )
    }
}

/// Δ_λ^{k−1} applied to x^{m}, then evaluated at 0, divided by λ^{k−1}.
///
/// Uses the convention 0⁰ = 1 for m = 0.
pub fn delta_lambda_zero_power(k: usize, m: usize) -> Result<LambdaPoly> {
    let mono = XPoly::monomial(m, LambdaPoly::one());
    forward_diff(&mono, &lam(), k - 1)
        .coeff(0)
        .div_lambda_pow((k - 1) as u32)
}
