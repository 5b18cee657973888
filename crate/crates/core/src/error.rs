use thiserror::Error;

/// Failure modes shared by every operation in the crate.
///
/// The variants map one-to-one onto the CLI exit codes: input, parse and
/// not-found errors exit with 1, resource errors with 2 and invariant
/// violations with 3.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("not found: {0}")]
    NotFound(String),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("invariant violation: {0}")]
    Invariant(String),
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) | Error::Parse { .. } | Error::NotFound(_) => 1,
            Error::Resource(_) => 2,
            Error::Invariant(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! input_err {
    ($($arg:tt)*) => { $crate::error::Error::Input(format!($($arg)*)) };
}

macro_rules! invariant_err {
    ($($arg:tt)*) => { $crate::error::Error::Invariant(format!($($arg)*)) };
}

pub(crate) use input_err;
pub(crate) use invariant_err;
