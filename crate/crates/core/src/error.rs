use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse braid token `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("{what} index {index} out of range {range}")]
    IndexOutOfRange {
        what: &'static str,
        index: i64,
        range: String,
    },

    #[error("{0}")]
    Domain(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("polynomial has no real root")]
    NoRealRoot,
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn out_of_range(what: &'static str, index: i64, range: impl Into<String>) -> Self {
        Error::IndexOutOfRange {
            what,
            index,
            range: range.into(),
        }
    }
}
