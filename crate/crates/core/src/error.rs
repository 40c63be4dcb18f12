use thiserror::Error;

use crate::expr::ParseError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    /// An exact division by a power of λ left a remainder. The coefficient
    /// formulas guarantee divisibility, so this always indicates a bug.
    #[error("not divisible by λ^{k}: {poly}")]
    NotDivisible { k: u32, poly: String },

    #[error("series has no multiplicative inverse: constant term {0} is not a unit")]
    NonUnitConstant(String),

    #[error("cannot expand the zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial depends on λ: {0}")]
    LambdaDependent(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("{id}: parameters out of range ({constraint})")]
    OutOfRange { id: String, constraint: String },

    #[error("degree {degree} exceeds the configured maximum {max}")]
    DegreeLimit { degree: u64, max: u64 },

    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl Error {
    /// True for failures of an internal algebraic invariant (as opposed to bad input).
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::NotDivisible { .. } | Error::NonUnitConstant(_))
    }
}
