use std::fmt;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// A syntax error in polynomial or Hilbert-polynomial text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input where the problem was detected.
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        Self {
            position,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("ambient dimension n must be at least 1")]
    AmbientTooSmall,
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("linear change of coordinates is singular")]
    Singular,
    #[error("matrix does not have the shape required by its kind tag {0}")]
    ShapeMismatch(String),
    #[error("Hilbert polynomial {0} is not admissible")]
    NotAdmissible(String),
    #[error("Hilbert polynomial {poly} does not fit in P^{n}")]
    NotEnoughVariables { poly: String, n: usize },
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("Hilbert polynomial interpolation did not stabilize")]
    InterpolationUnstable,
    #[error("internal error: {0}")]
    Internal(String),
}
