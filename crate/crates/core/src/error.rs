use thiserror::Error;

/// Errors raised by the ring, parser and combinatorics layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring dimension mismatch: ({0},{1}) vs ({2},{3})")]
    Dimension(usize, usize, usize, usize),
    #[error("characteristic mismatch: {0} vs {1}")]
    Characteristic(u64, u64),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("not divisible")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("not a unit: {0}")]
    NotAUnit(String),
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("element outside the admissible subring: {0}")]
    NotAdmissible(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("not in span: {0}")]
    NotInSpan(String),
}

pub type Result<T> = std::result::Result<T, Error>;
