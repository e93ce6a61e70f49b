use core::fmt;

use alloc::string::String;

use crate::verdict::Failure;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A factor, table entry or shape was out of range.
    InvalidInput(String),
    /// Operand dimensions do not agree.
    DimensionMismatch { expected: usize, found: usize },
    /// A configured size cap was exceeded.
    SizeBound { size: usize, bound: usize },
    /// Checked integer arithmetic overflowed.
    Overflow,
    /// A subgroup generator is outside the span it was declared in.
    NotInSpan,
    /// The input is well formed but breaks a required law.
    Property(Failure),
    /// An internal consistency check failed. Always a bug.
    Internal(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::SizeBound { size, bound } => {
                write!(f, "size {size} exceeds the configured bound {bound}")
            }
            Error::Overflow => f.write_str("integer overflow"),
            Error::NotInSpan => f.write_str("element lies outside the ambient span"),
            Error::Property(failure) => write!(f, "property fails: {failure}"),
            Error::Internal(msg) => write!(f, "internal invariant violated: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

impl From<Failure> for Error {
    fn from(failure: Failure) -> Self {
        Error::Property(failure)
    }
}
