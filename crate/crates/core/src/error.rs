use thiserror::Error;

/// Errors produced by the graph library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vertex id, set, or other argument is outside its valid range.
    #[error("input error: {0}")]
    Input(String),
    /// The operation is not defined for this representation or graph kind.
    #[error("mode error: {0}")]
    Mode(String),
    /// A generator parameter is invalid.
    #[error("parameter error: {0}")]
    Parameter(String),
    /// The instance exceeds the size cap of an exponential-time routine.
    #[error("size error: n = {n} exceeds cap {cap}")]
    Size { n: usize, cap: usize },
    /// An algorithm precondition was violated by the caller.
    #[error("contract violation: {0}")]
    ContractViolation(String),
    /// A file could not be parsed.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
