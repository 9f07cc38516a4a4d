use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input refers to unknown items or dimensions, or violates a type invariant.
    #[error("malformed input: {0}")]
    Malformed(String),

    /// An operation was called outside its documented precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Exhaustive enumeration would exceed the configured cap.
    #[error("enumeration of {required} assignments exceeds the cap of {cap}")]
    SizeLimit { required: String, cap: u64 },

    /// A checker input makes the checked quantity undefined.
    #[error("degenerate input: {0}")]
    Degenerate(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn malformed(msg: impl Into<String>) -> Error {
    Error::Malformed(msg.into())
}

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
