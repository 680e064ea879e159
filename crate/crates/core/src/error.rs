use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Arguments that violate a documented precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unsupported size: {0}")]
    UnsupportedSize(String),

    #[error("malformed graph6 record: {0}")]
    Malformed(String),

    /// The exact solvers enumerate every balanced bipartition and refuse
    /// graphs above their configured vertex limit.
    #[error("graph has {n} vertices, above the exact limit of {limit}; use the heuristic solver or raise the limit")]
    Capacity { n: usize, limit: usize },

    #[error("theorem check `{id}` failed to run: {source}")]
    Check {
        id: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// True for errors caused by a size bound rather than by bad input.
    pub fn is_capacity(&self) -> bool {
        match self {
            Error::Capacity { .. } => true,
            Error::Check { source, .. } => source.is_capacity(),
            _ => false,
        }
    }
}
