use thiserror::Error;

/// Crate-wide error type. Variants map onto the CLI exit codes: parse and
/// input problems exit 2, capacity overruns exit 3.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop on vertex {0} is not allowed")]
    SelfLoop(usize),

    #[error("requested size {requested} exceeds the supported maximum {max}")]
    CapacityExceeded { requested: usize, max: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),

    #[error("parse error at byte {offset}: {reason}")]
    Parse { offset: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Error {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn parse(offset: usize, reason: impl Into<String>) -> Error {
        Error::Parse {
            offset,
            reason: reason.into(),
        }
    }
}
