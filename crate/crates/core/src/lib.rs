//! Exact expansion of polynomials in degenerate Bernoulli bases over ℚ[λ].
//!
//! Polynomials are [`XPoly`] values: dense in `x`, with [`LambdaPoly`]
//! coefficients. [`basis::expand`] and [`basis::expand_higher`] produce the
//! coefficients `a_k` with `p(x) = Σ a_k β^{(r)}_{k,λ}(x)`, and each
//! coefficient can be computed along several independent routes.

pub mod basis;
pub mod error;
pub mod expr;
pub mod families;
pub mod identities;
pub mod lambda_poly;
pub mod rational;
pub mod series;
pub mod umbral;
pub mod xpoly;

pub use basis::{
    expand, expand_higher, expand_t31, reconstruct, BasisExpansion, CoefficientRoute, ConstantRoute, FBranchRoute,
    GBranchRoute,
};
pub use error::{Error, Result};
pub use expr::{parse, parse_poly, ParseError};
pub use lambda_poly::LambdaPoly;
pub use series::{Ring, TruncSeries};
pub use xpoly::XPoly;
