//! A corpus of polynomial identities, each checked as an exact equation.
//!
//! A case passes when `lhs − rhs` is the zero polynomial. Cases whose
//! expectation is [`Expectation::SuspectedTypo`] record a known misprint: they
//! are reported but never counted as failures.

mod corpus;

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::lambda_poly::LambdaPoly;
use crate::xpoly::XPoly;

use corpus::Sides;

/// Named integer parameters in declaration order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Params(Vec<(&'static str, u32)>);

impl Params {
    pub fn new(pairs: Vec<(&'static str, u32)>) -> Self {
        Self(pairs)
    }

    pub fn n(n: u32) -> Self {
        Self(vec![("n", n)])
    }

    pub fn mn(m: u32, n: u32) -> Self {
        Self(vec![("m", m), ("n", n)])
    }

    pub fn nr(n: u32, r: u32) -> Self {
        Self(vec![("n", n), ("r", r)])
    }

    pub fn nra(n: u32, r: u32, a: u32) -> Self {
        Self(vec![("n", n), ("r", r), ("a", a)])
    }

    pub fn get(&self, name: &str) -> Option<u32> {
        self.0.iter().find(|(k, _)| *k == name).map(|(_, v)| *v)
    }

    pub fn pairs(&self) -> &[(&'static str, u32)] {
        &self.0
    }

    fn value(&self, name: &str) -> u32 {
        self.get(name).expect("parameters are validated before building")
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(", "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expectation {
    Holds,
    /// The printed form is known to be wrong for part of its range.
    SuspectedTypo,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityCase {
    pub id: &'static str,
    pub params: Params,
    pub lhs: XPoly,
    pub rhs: XPoly,
    pub discrepancy: XPoly,
    pub expectation: Expectation,
}

impl IdentityCase {
    fn new(id: &'static str, params: Params, sides: Sides, expectation: Expectation) -> Self {
        let discrepancy = &sides.lhs - &sides.rhs;
        Self {
            id,
            params,
            lhs: sides.lhs,
            rhs: sides.rhs,
            discrepancy,
            expectation,
        }
    }

    /// Discrepancy is exactly zero.
    pub fn holds(&self) -> bool {
        self.discrepancy.is_zero()
    }

    pub fn is_failure(&self) -> bool {
        self.expectation == Expectation::Holds && !self.holds()
    }

    /// `(x-exponent, λ-exponent, coefficient)` of the lowest nonzero discrepancy term.
    pub fn offending_monomial(&self) -> Option<(usize, u32, BigRational)> {
        self.discrepancy.first_term()
    }

    /// Adds `c` to the right side; the harness self-test uses this.
    pub fn perturbed(self, c: &BigRational) -> Self {
        let rhs = self.rhs + XPoly::constant(LambdaPoly::constant(c.clone()));
        let sides = Sides { lhs: self.lhs, rhs };
        Self::new(self.id, self.params, sides, self.expectation)
    }

    pub fn status(&self) -> &'static str {
        match (self.holds(), self.expectation) {
            (true, _) => "ok",
            (false, Expectation::Holds) => "FAIL",
            (false, Expectation::SuspectedTypo) => "typo",
        }
    }
}

#[derive(Clone, Copy)]
enum Sweep {
    /// n from the minimum to n_max.
    N(u32),
    /// m, n ≥ minimum with m + n ≤ n_max.
    Mn(u32),
    /// n ≤ n_max, r ≤ r_max, 1 ≤ a ≤ a_max.
    Nra,
    /// 3 ≤ n ≤ n_max, 1 ≤ r ≤ min(n, r_max).
    Nr,
}

struct Entry {
    id: &'static str,
    summary: &'static str,
    constraint: &'static str,
    valid: fn(&Params) -> bool,
    sweep: Sweep,
    defaults: Limits,
    expectation: Expectation,
    build: fn(&Params) -> Result<Sides>,
}

impl Entry {
    fn names(&self) -> &'static [&'static str] {
        match self.sweep {
            Sweep::N(_) => &["n"],
            Sweep::Mn(_) => &["m", "n"],
            Sweep::Nra => &["n", "r", "a"],
            Sweep::Nr => &["n", "r"],
        }
    }
}

const fn lim(n_max: u32, r_max: u32, a_max: u32) -> Limits {
    Limits { n_max, r_max, a_max }
}

fn n_ge(p: &Params, k: u32) -> bool {
    p.value("n") >= k
}

const NONE: Limits = lim(0, 0, 0);

#[rustfmt::skip]
const CORPUS: &[Entry] = &[
    Entry { id: "1a", summary: "Bernoulli polynomial convolution over even indices, with the odd middle terms", constraint: "n ≥ 2",
        valid: |p| n_ge(p, 2), sweep: Sweep::N(2), defaults: lim(8, 0, 0), expectation: Expectation::Holds, build: corpus::one_a },
    Entry { id: "1a_printed", summary: "the even-index convolution as commonly printed, without the odd middle terms", constraint: "n ≥ 2",
        valid: |p| n_ge(p, 2), sweep: Sweep::N(2), defaults: lim(8, 0, 0), expectation: Expectation::SuspectedTypo, build: corpus::one_a_printed },
    Entry { id: "miki", summary: "variant of Miki's identity (x = 0)", constraint: "n ≥ 2",
        valid: |p| n_ge(p, 2), sweep: Sweep::N(2), defaults: lim(8, 0, 0), expectation: Expectation::Holds, build: corpus::miki },
    Entry { id: "fpz", summary: "Faber-Pandharipande-Zagier identity (x = 1/2)", constraint: "n ≥ 2",
        valid: |p| n_ge(p, 2), sweep: Sweep::N(2), defaults: lim(8, 0, 0), expectation: Expectation::Holds, build: corpus::fpz },
    Entry { id: "ex_a_polyid", summary: "Σ_j C(n,j)B_{n−j} λ^{j+1}/(j+1)(B_{j+1}(1/λ) − B_{j+1}) = λⁿB_n", constraint: "n ≥ 0",
        valid: |_| true, sweep: Sweep::N(1), defaults: lim(8, 0, 0), expectation: Expectation::Holds, build: corpus::ex_a_polyid },
    Entry { id: "ex_a", summary: "B_n(x) in the degenerate basis", constraint: "n ≥ 0",
        valid: |_| true, sweep: Sweep::N(1), defaults: lim(8, 0, 0), expectation: Expectation::Holds, build: corpus::ex_a },
    Entry { id: "ex_a_coeffs", summary: "expansion coefficients of B_n(x) against the closed form", constraint: "n ≥ 0",
        valid: |_| true, sweep: Sweep::N(1), defaults: lim(8, 0, 0), expectation: Expectation::Holds, build: corpus::ex_a_coeffs },
    Entry { id: "4e", summary: "Σ B_k(x)B_{n−k}(x)/(k(n−k)) in Bernoulli polynomials", constraint: "n ≥ 2",
        valid: |p| n_ge(p, 2), sweep: Sweep::N(2), defaults: lim(10, 0, 0), expectation: Expectation::Holds, build: corpus::four_e },
    Entry { id: "ex_b", summary: "Bernoulli convolution in the degenerate basis", constraint: "n ≥ 2",
        valid: |p| n_ge(p, 2), sweep: Sweep::N(2), defaults: lim(8, 0, 0), expectation: Expectation::Holds, build: corpus::ex_b },
    Entry { id: "ex_b_coeffs", summary: "expansion coefficients of the Bernoulli convolution", constraint: "n ≥ 2",
        valid: |p| n_ge(p, 2), sweep: Sweep::N(2), defaults: lim(8, 0, 0), expectation: Expectation::Holds, build: corpus::ex_b_coeffs },
    Entry { id: "ex_c", summary: "Σ E_k(x)E_{n−k}(x)/(k(n−k)) in Bernoulli polynomials", constraint: "n ≥ 2",
        valid: |p| n_ge(p, 2), sweep: Sweep::N(2), defaults: lim(8, 0, 0), expectation: Expectation::Holds, build: corpus::ex_c },
    Entry { id: "ex_c_beta", summary: "Euler convolution in the degenerate basis", constraint: "n ≥ 2",
        valid: |p| n_ge(p, 2), sweep: Sweep::N(2), defaults: lim(8, 0, 0), expectation: Expectation::Holds, build: corpus::ex_c_beta },
    Entry { id: "ex_c_coeffs", summary: "expansion coefficients of the Euler convolution", constraint: "n ≥ 2",
        valid: |p| n_ge(p, 2), sweep: Sweep::N(2), defaults: lim(8, 0, 0), expectation: Expectation::Holds, build: corpus::ex_c_coeffs },
    Entry { id: "7e", summary: "Σ G_k(x)G_{n−k}(x)/(k(n−k)) in Bernoulli polynomials", constraint: "n ≥ 3",
        valid: |p| n_ge(p, 3), sweep: Sweep::N(3), defaults: lim(10, 0, 0), expectation: Expectation::Holds, build: corpus::seven_e },
    Entry { id: "ex_d", summary: "Genocchi convolution in the degenerate basis", constraint: "n ≥ 3",
        valid: |p| n_ge(p, 3), sweep: Sweep::N(3), defaults: lim(10, 0, 0), expectation: Expectation::Holds, build: corpus::ex_d },
    Entry { id: "ex_d_coeffs", summary: "expansion coefficients of the Genocchi convolution", constraint: "n ≥ 3",
        valid: |p| n_ge(p, 3), sweep: Sweep::N(3), defaults: lim(10, 0, 0), expectation: Expectation::Holds, build: corpus::ex_d_coeffs },
    Entry { id: "ex_e", summary: "B_m(x)B_n(x) in Bernoulli polynomials", constraint: "m ≥ 1, n ≥ 1",
        valid: |p| p.value("m") >= 1 && p.value("n") >= 1, sweep: Sweep::Mn(1), defaults: lim(10, 0, 0), expectation: Expectation::Holds, build: corpus::ex_e },
    Entry { id: "ex_e_beta", summary: "B_m(x)B_n(x) in the degenerate basis", constraint: "m ≥ 1, n ≥ 1",
        valid: |p| p.value("m") >= 1 && p.value("n") >= 1, sweep: Sweep::Mn(1), defaults: lim(10, 0, 0), expectation: Expectation::Holds, build: corpus::ex_e_beta },
    Entry { id: "ex_e_coeffs", summary: "expansion coefficients of B_m(x)B_n(x)", constraint: "m ≥ 1, n ≥ 1",
        valid: |p| p.value("m") >= 1 && p.value("n") >= 1, sweep: Sweep::Mn(1), defaults: lim(10, 0, 0), expectation: Expectation::Holds, build: corpus::ex_e_coeffs },
    Entry { id: "ex_f", summary: "E_m(x)E_n(x) in Bernoulli polynomials", constraint: "m ≥ 0, n ≥ 0",
        valid: |_| true, sweep: Sweep::Mn(0), defaults: lim(10, 0, 0), expectation: Expectation::Holds, build: corpus::ex_f },
    Entry { id: "ex_f_beta", summary: "E_m(x)E_n(x) in the degenerate basis", constraint: "m ≥ 0, n ≥ 0",
        valid: |_| true, sweep: Sweep::Mn(0), defaults: lim(10, 0, 0), expectation: Expectation::Holds, build: corpus::ex_f_beta },
    Entry { id: "ex_f_coeffs", summary: "expansion coefficients of E_m(x)E_n(x)", constraint: "m ≥ 0, n ≥ 0",
        valid: |_| true, sweep: Sweep::Mn(0), defaults: lim(10, 0, 0), expectation: Expectation::Holds, build: corpus::ex_f_coeffs },
    Entry { id: "8e", summary: "I^a applied to λⁿB_n^{(r)}(x/λ)", constraint: "a ≥ 1",
        valid: |p| p.value("a") >= 1, sweep: Sweep::Nra, defaults: lim(6, 3, 3), expectation: Expectation::Holds, build: corpus::eight_e },
    Entry { id: "ex_g", summary: "Genocchi convolution in the order-r degenerate basis", constraint: "n ≥ 3, 1 ≤ r ≤ n",
        valid: |p| n_ge(p, 3) && p.value("r") >= 1 && p.value("r") <= p.value("n"), sweep: Sweep::Nr, defaults: lim(6, 4, 0), expectation: Expectation::Holds, build: corpus::ex_g },
    Entry { id: "ex_g_coeffs", summary: "order-r expansion coefficients of the Genocchi convolution", constraint: "n ≥ 3, 1 ≤ r ≤ n",
        valid: |p| n_ge(p, 3) && p.value("r") >= 1 && p.value("r") <= p.value("n"), sweep: Sweep::Nr, defaults: lim(6, 4, 0), expectation: Expectation::Holds, build: corpus::ex_g_coeffs },
];

fn entry(id: &str) -> Result<&'static Entry> {
    CORPUS
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Identity ids in sorted order.
pub fn ids() -> Vec<&'static str> {
    let mut v: Vec<_> = CORPUS.iter().map(|e| e.id).collect();
    v.sort_unstable();
    v
}

pub fn summary(id: &str) -> Result<&'static str> {
    Ok(entry(id)?.summary)
}

/// Parameter names, in the order [`Params`] stores them.
pub fn param_names(id: &str) -> Result<&'static [&'static str]> {
    Ok(entry(id)?.names())
}

/// Builds [`Params`] for `id`, reading each required name from `lookup`.
pub fn params_from(id: &str, lookup: impl Fn(&str) -> Option<u32>) -> Result<Params> {
    let names = param_names(id)?;
    let mut pairs = Vec::with_capacity(names.len());
    for name in names {
        let v = lookup(name).ok_or_else(|| Error::InvalidArgument(format!("identity {id} needs parameter {name}")))?;
        pairs.push((*name, v));
    }
    Ok(Params(pairs))
}

pub fn verify(id: &str, params: &Params) -> Result<IdentityCase> {
    let e = entry(id)?;
    let names: Vec<&str> = params.0.iter().map(|(k, _)| *k).collect();
    if names != e.names() {
        return Err(Error::InvalidArgument(format!(
            "identity {} takes parameters ({}), got ({})",
            e.id,
            e.names().join(", "),
            names.join(", ")
        )));
    }
    if !(e.valid)(params) {
        return Err(Error::OutOfRange {
            id: e.id.to_string(),
            constraint: e.constraint.to_string(),
        });
    }
    let sides = (e.build)(params)?;
    Ok(IdentityCase::new(e.id, params.clone(), sides, e.expectation))
}

/// Sweep limits for one identity. A zero `n_max` disables it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub n_max: u32,
    pub r_max: u32,
    pub a_max: u32,
}

/// Per-identity sweep limits for [`verify_all`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    limits: BTreeMap<&'static str, Limits>,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            limits: CORPUS.iter().map(|e| (e.id, e.defaults)).collect(),
        }
    }
}

impl Bounds {
    /// Every identity disabled.
    pub fn zero() -> Self {
        Self {
            limits: CORPUS.iter().map(|e| (e.id, NONE)).collect(),
        }
    }

    pub fn limits(&self, id: &str) -> Limits {
        self.limits.get(id).copied().unwrap_or(NONE)
    }

    pub fn set(&mut self, id: &str, limits: Limits) -> Result<()> {
        let e = entry(id)?;
        self.limits.insert(e.id, limits);
        Ok(())
    }

    /// Keeps only the listed identities.
    pub fn only(mut self, ids: &[&str]) -> Result<Self> {
        for id in ids {
            entry(id)?;
        }
        for (id, l) in self.limits.iter_mut() {
            if !ids.contains(id) {
                *l = NONE;
            }
        }
        Ok(self)
    }

    pub fn with_n_max(mut self, n_max: u32) -> Self {
        self.limits.values_mut().for_each(|l| l.n_max = n_max);
        self
    }

    pub fn with_r_max(mut self, r_max: u32) -> Self {
        self.limits.values_mut().for_each(|l| l.r_max = r_max);
        self
    }

    pub fn with_a_max(mut self, a_max: u32) -> Self {
        self.limits.values_mut().for_each(|l| l.a_max = a_max);
        self
    }
}

fn sweep(e: &Entry, l: Limits) -> Vec<Params> {
    if l.n_max == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    match e.sweep {
        Sweep::N(min) => out.extend((min..=l.n_max).map(Params::n)),
        Sweep::Mn(min) => {
            for m in min..=l.n_max {
                for n in min..=l.n_max.saturating_sub(m) {
                    out.push(Params::mn(m, n));
                }
            }
        }
        Sweep::Nra => {
            for n in 0..=l.n_max {
                for r in 0..=l.r_max {
                    out.extend((1..=l.a_max).map(|a| Params::nra(n, r, a)));
                }
            }
        }
        Sweep::Nr => {
            for n in 3..=l.n_max {
                out.extend((1..=n.min(l.r_max)).map(|r| Params::nr(n, r)));
            }
        }
    }
    out.retain(|p| (e.valid)(p));
    out
}

/// Every case within `bounds`, sorted by id and then parameters.
pub fn verify_all(bounds: &Bounds) -> Result<Vec<IdentityCase>> {
    let mut jobs: Vec<(&'static Entry, Params)> = Vec::new();
    for e in CORPUS {
        for p in sweep(e, bounds.limits(e.id)) {
            jobs.push((e, p));
        }
    }
    jobs.sort_by(|a, b| (a.0.id, &a.1).cmp(&(b.0.id, &b.1)));
    jobs.into_iter()
        .map(|(e, p)| {
            let sides = (e.build)(&p)?;
            Ok(IdentityCase::new(e.id, p, sides, e.expectation))
        })
        .collect()
}
