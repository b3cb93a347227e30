use thiserror::Error;

/// Failure modes shared by every operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument violated the operation's precondition.
    #[error("{op}: domain error: {detail}")]
    Domain { op: &'static str, detail: String },
    /// A checked 64-bit operation would have wrapped.
    #[error("{op}: arithmetic overflow")]
    Overflow { op: &'static str },
    /// The request exceeds a size guard or a table's coverage.
    #[error("{op}: out of range: {detail}")]
    Range { op: &'static str, detail: String },
}

impl Error {
    pub(crate) fn domain(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            op,
            detail: detail.into(),
        }
    }

    pub(crate) fn range(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Range {
            op,
            detail: detail.into(),
        }
    }

    /// True for overflow and range failures (as opposed to bad input).
    pub fn is_range_like(&self) -> bool {
        matches!(self, Error::Overflow { .. } | Error::Range { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
