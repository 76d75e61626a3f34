use thiserror::Error;

/// Errors produced by graph construction, parsing, search and certification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("capacity exceeded: {requested} vertices requested, at most {max} supported")]
    Capacity { requested: usize, max: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("malformed input at byte {offset}: {reason}")]
    Malformed { offset: usize, reason: String },

    #[error("arity mismatch: {0}")]
    Arity(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("instance too large for exhaustive enumeration: {0}")]
    Oversized(String),

    #[error("registry: {0}")]
    Registry(String),

    #[error("validation failed: {0}")]
    Validation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
