use alloc::string::String;

use crate::charlib::PowerKind;
use crate::weight::Weight;

pub type Result<T> = core::result::Result<T, Error>;

/// Failures raised by the core library.
///
/// Everything except [`Error::Inconsistency`] is a validation failure: the
/// caller asked for something outside the domain of an operation. An
/// inconsistency means an identity that must hold mathematically did not,
/// which points at a bug rather than bad input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid Lie type {family}{rank}: {reason}")]
    InvalidType {
        family: char,
        rank: usize,
        reason: String,
    },
    #[error("weight has {got} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("xi is zero: max over R is 0, so Psi(xi) is undefined")]
    ZeroXi,
    #[error("Psi({0}) is not contained in the positive roots")]
    PsiNotPositive(Weight),
    #[error("{lower} is not below {upper} in the Psi order")]
    Incomparable { lower: Weight, upper: Weight },
    #[error("degree {degree} exceeds the configured ceiling {limit} for {kind} powers")]
    DegreeCeiling {
        kind: PowerKind,
        degree: usize,
        limit: usize,
    },
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

impl Error {
    pub fn is_validation(&self) -> bool {
        !matches!(self, Error::Inconsistency(_))
    }
}
