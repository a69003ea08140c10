//! Crate-wide error type. Variants map onto the CLI exit codes:
//! usage/parse problems exit 2, budget refusals exit 3, and a seed that
//! fails an asserted contagion exits 1.

use std::fmt;
use std::io;

#[derive(Debug)]
pub enum Error {
    /// Bad parameters or violated operation preconditions.
    InvalidArgument(String),
    /// Malformed graph document, with a 1-based line number.
    Parse {
        line: usize,
        message: String,
    },
    /// An enumeration would exceed the configured budget; the caller must
    /// shrink the instance rather than get a silently truncated answer.
    BudgetExceeded {
        required: u128,
        budget: u64,
    },
    /// An invariant the theory guarantees failed to hold; e.g. a
    /// constructed seed that does not percolate.
    Internal(String),
    Io(io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::Parse { line, message } => write!(f, "parse error at line {line}: {message}"),
            Error::BudgetExceeded { required, budget } => write!(
                f,
                "enumeration budget exceeded: {required} objects needed, budget is {budget}"
            ),
            Error::Internal(msg) => write!(f, "internal invariant violation: {msg}"),
            Error::Io(e) => write!(f, "io error: {e}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<io::Error> for Error {
    fn from(e: io::Error) -> Self {
        Error::Io(e)
    }
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
