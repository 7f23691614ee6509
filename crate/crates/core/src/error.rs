use thiserror::Error;

use crate::symbol::Flavor;

/// Errors raised by code construction, enumeration and classification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("flavor mismatch: expected {expected}, found {found}")]
    FlavorMismatch { expected: Flavor, found: Flavor },
    #[error("length {0} exceeds the supported maximum of {max}", max = crate::word::MAX_LENGTH)]
    LengthTooLarge(usize),
    #[error("code of rank {rank} exceeds the enumeration guard of {limit}")]
    EnumerationGuard { rank: usize, limit: usize },
    #[error("the zero code has no minimum weight")]
    ZeroCode,
    #[error("code is not self-orthogonal")]
    NotSelfOrthogonal,
    #[error("code is not an even self-dual code")]
    NotEvenSelfDual,
    #[error("coset representative lies in the code")]
    ZeroCoset,
    #[error("coset has no representative of odd Euclidean weight")]
    NoOddRepresentative,
    #[error("unknown code name `{0}`")]
    UnknownName(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("length {length} exceeds the configured search limit {limit}")]
    LimitExceeded { length: usize, limit: usize },
    #[error("MacWilliams transform produced a non-integral coefficient")]
    NonIntegral,
    #[error("polynomial is not in the invariant ring spanned by the generators")]
    NotInRing,
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("correspondence check failed: {0}")]
    Correspondence(String),
}

pub type Result<T> = std::result::Result<T, CodeError>;
