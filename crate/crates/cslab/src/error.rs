use std::fmt;

use cslab_core::{Error, Failure};

/// Everything a command can end with besides success.
#[derive(Debug)]
pub enum CliError {
    /// Malformed or out-of-range input; exit code 2.
    Invalid(String),
    /// A law fails on well-formed input; exit code 1.
    Property(Failure),
    /// A consistency check inside the library failed.
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Property(_) => 1,
            CliError::Invalid(_) | CliError::Internal(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Invalid(msg) => write!(f, "invalid input: {msg}"),
            CliError::Property(failure) => write!(f, "{failure}"),
            CliError::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Property(failure) => CliError::Property(failure),
            Error::Internal(msg) => CliError::Internal(msg),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

impl From<Failure> for CliError {
    fn from(failure: Failure) -> Self {
        CliError::Property(failure)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
