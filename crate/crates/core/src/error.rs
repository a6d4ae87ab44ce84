use thiserror::Error;

/// Errors raised by the numeric layer (values, operators, weights).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("malformed bounds [{0}, {1}], [{2}, {3}]: need 0 <= lo <= hi <= 1 on both intervals")]
    MalformedBounds(f64, f64, f64, f64),
    #[error("{value} violates mu_hi^q + nu_hi^q <= 1 at q = {q}")]
    InvalidNumber { value: crate::Ivqrofn, q: f64 },
    #[error("result {value} leaves the valid region at q = {q}")]
    OutsideRung { value: crate::Ivqrofn, q: f64 },
    #[error("rung q must be finite and >= 1, got {0}")]
    InvalidRung(f64),
    #[error("Weber lambda must lie in (-1, inf) and differ from 0, got {0}")]
    InvalidLambda(f64),
    #[error("invalid {family} parameter {value}")]
    InvalidFamilyParameter { family: &'static str, value: f64 },
    #[error("scalar multiplier / exponent must be finite and > 0, got {0}")]
    NonPositiveScalar(f64),
    #[error("{what}: expected length {expected}, found {found}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{0} must not be empty")]
    Empty(&'static str),
    #[error("invalid weight vector: {0}")]
    InvalidWeights(String),
    #[error("no integer q in [1, {q_max}] makes every value valid")]
    NoValidRung { q_max: u32 },
    #[error("unknown linguistic term `{0}`")]
    UnknownTerm(String),
    #[error("unknown operator family `{0}`")]
    UnknownFamily(String),
    #[error("ideal column has zero norm")]
    ZeroIdealNorm,
    #[error("score {0} is not positive")]
    NonPositiveScore(f64),
    #[error("need at least {needed} scores, found {found}")]
    TooFewScores { needed: usize, found: usize },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
