//! JSON form of an expansion. Every number is a string: integers in decimal,
//! rationals as reduced `"p/q"` (or `"p"` when q = 1).

use degbern_core::rational::{format_rational, parse_rational};
use degbern_core::{BasisExpansion, Error, LambdaPoly, Result};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientEntry {
    pub k: String,
    /// `[exponent of λ, coefficient]` pairs in increasing exponent order.
    pub lambda_poly: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaValues {
    pub lambda: String,
    pub coefficients: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionDocument {
    pub input: String,
    pub order: String,
    pub degree: String,
    pub coefficients: Vec<CoefficientEntry>,
    pub tool_version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub at_lambda: Option<LambdaValues>,
}

fn encode(p: &LambdaPoly) -> Vec<(String, String)> {
    p.terms().map(|(e, c)| (e.to_string(), format_rational(c))).collect()
}

fn integer<T: std::str::FromStr + ToString>(field: &str, s: &str) -> Result<T> {
    match s.parse::<T>() {
        Ok(v) if v.to_string() == s => Ok(v),
        _ => Err(Error::InvalidArgument(format!(
            "{field}: `{s}` is not a canonical integer"
        ))),
    }
}

fn rational(s: &str) -> Result<BigRational> {
    let v = parse_rational(s)?;
    if format_rational(&v) != s {
        return Err(Error::InvalidArgument(format!("`{s}` is not a reduced rational")));
    }
    Ok(v)
}

fn decode(terms: &[(String, String)]) -> Result<LambdaPoly> {
    let mut prev = None;
    let mut parsed = Vec::with_capacity(terms.len());
    for (e, c) in terms {
        let e: u32 = integer("exponent", e)?;
        if prev.is_some_and(|p| p >= e) {
            return Err(Error::InvalidArgument("λ exponents must be strictly increasing".into()));
        }
        prev = Some(e);
        let c = rational(c)?;
        if c == BigRational::from_integer(0.into()) {
            return Err(Error::InvalidArgument("zero coefficient in lambda_poly".into()));
        }
        parsed.push((e, c));
    }
    Ok(LambdaPoly::from_terms(parsed))
}

impl ExpansionDocument {
    pub fn new(input: &str, e: &BasisExpansion, at: Option<&BigRational>) -> Self {
        let coefficients = e
            .coefficients
            .iter()
            .enumerate()
            .map(|(k, a)| CoefficientEntry {
                k: k.to_string(),
                lambda_poly: encode(a),
            })
            .collect();
        let at_lambda = at.map(|s| LambdaValues {
            lambda: format_rational(s),
            coefficients: e.coefficients.iter().map(|a| format_rational(&a.eval(s))).collect(),
        });
        Self {
            input: input.to_string(),
            order: e.order.to_string(),
            degree: e.degree().to_string(),
            coefficients,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            at_lambda,
        }
    }

    /// Rebuilds the expansion; the source polynomial is recomputed from the coefficients.
    pub fn to_expansion(&self) -> Result<BasisExpansion> {
        let order: u32 = integer("order", &self.order)?;
        if order == 0 {
            return Err(Error::InvalidArgument("order must be at least 1".into()));
        }
        let degree: usize = integer("degree", &self.degree)?;
        if self.coefficients.len() != degree + 1 {
            return Err(Error::InvalidArgument(format!(
                "degree {degree} needs {} coefficients, found {}",
                degree + 1,
                self.coefficients.len()
            )));
        }
        let mut coeffs = Vec::with_capacity(degree + 1);
        for (i, entry) in self.coefficients.iter().enumerate() {
            let k: usize = integer("k", &entry.k)?;
            if k != i {
                return Err(Error::InvalidArgument(format!("coefficient {i} is labelled k = {k}")));
            }
            coeffs.push(decode(&entry.lambda_poly)?);
        }
        Ok(BasisExpansion::from_coefficients(order, coeffs))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidArgument(format!("bad expansion document: {e}")))
    }
}
