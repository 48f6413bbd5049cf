use thiserror::Error;

use crate::report::Witness;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("matrix is singular")]
    Singular,

    /// An input violates a precondition of the requested operation. When the
    /// violation was found by an exhaustive check the first offending tuple is
    /// attached.
    #[error("precondition failed: {reason}{}", .witness.as_ref().map(|w| format!(" at {w}")).unwrap_or_default())]
    Precondition { reason: String, witness: Option<Witness> },

    #[error("{file}:{line}: field `{field}`: {message}")]
    Parse { file: String, line: usize, field: String, message: String },

    #[error("dimension {dim} exceeds the supported maximum of {max}")]
    TooLarge { dim: usize, max: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn precondition(reason: impl Into<String>) -> Self {
        Error::Precondition { reason: reason.into(), witness: None }
    }

    pub(crate) fn failed_check(reason: impl Into<String>, report: &crate::report::CheckReport) -> Self {
        Error::Precondition { reason: reason.into(), witness: report.witness.clone() }
    }
}
