use thiserror::Error;

/// Errors raised while decoding graph input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("graph6: malformed header at byte {offset}: {reason}")]
    Header { offset: usize, reason: &'static str },
    #[error("graph6: byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },
    #[error("graph6: input truncated at byte {offset}, expected {expected} data bytes")]
    Truncated { offset: usize, expected: usize },
    #[error("graph6: trailing garbage starting at byte {offset}")]
    TrailingGarbage { offset: usize },
    #[error("graph6: nonzero padding bits in byte at offset {offset}")]
    Padding { offset: usize },
    #[error("edge list: {0}")]
    Json(String),
    #[error("invalid graph: {0}")]
    Invalid(String),
}

impl ParseError {
    /// Byte offset of the failure, when the input was graph6.
    pub fn offset(&self) -> Option<usize> {
        match *self {
            ParseError::Header { offset, .. }
            | ParseError::ByteOutOfRange { offset, .. }
            | ParseError::Truncated { offset, .. }
            | ParseError::TrailingGarbage { offset }
            | ParseError::Padding { offset } => Some(offset),
            ParseError::Json(_) | ParseError::Invalid(_) => None,
        }
    }
}

/// Errors raised by the group and invariant computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("degree mismatch: expected {expected}, got {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("group order {order} exceeds enumeration limit {limit}")]
    TooLarge { order: String, limit: u64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("motion undefined for the trivial group")]
    MotionUndefined,
    #[error("subset budget of {budget} exhausted")]
    BudgetExhausted { budget: u64 },
    #[error("truncation exhausted after {achieved} rounds: {reason}")]
    Exhausted { achieved: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
