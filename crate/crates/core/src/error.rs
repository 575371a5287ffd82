use thiserror::Error;

use crate::exactmath::Q;

/// Position-annotated syntax error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("infinite root set")]
    InfiniteRootSet,
    #[error("integer root does not fit in 64 bits")]
    RootOutOfRange,
    #[error("coefficients too large for exact root search")]
    RootSearchLimit,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("no graded part")]
    NoGradedPart,
    #[error("trace defined only on F")]
    TraceOnlyOnF,
    #[error("index undefined for compact operators")]
    IndexUndefined,
    #[error("not Fredholm on K[x]")]
    NotFredholm,
    #[error("not invertible on K[x]")]
    NotInvertibleOnKx,
    #[error("determinant defined only on K+F")]
    NotInKF,
    #[error("not a unit: det = {0}")]
    NotUnit(Q),
    #[error("not left invertible")]
    NotLeftInvertible,
    #[error("centralizer is all of the algebra")]
    ConstantCentralizer,
    #[error("polynomial is not irreducible over Q: {0}")]
    NotIrreducible(String),
    #[error("not of normal-candidate shape")]
    NotCandidateShape,
    #[error("normalization failed: {0}")]
    NormalizeFailed(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl Error {
    /// Syntax errors are usage errors; everything else is a domain error.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
