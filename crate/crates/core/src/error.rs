use thiserror::Error;

/// Errors raised anywhere in the transform pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum QltError {
    /// A scalar parameter lies outside its admissible domain.
    #[error("parameter out of domain: {0}")]
    Domain(String),

    /// Lengths, indices or register sizes disagree.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// The request would exceed a memory guard.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// The signal (or weight vector) is identically zero, so no preparation state exists.
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// The operation is not available for this input structure.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T, E = QltError> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> QltError {
    QltError::Domain(msg.into())
}

pub(crate) fn shape(msg: impl Into<String>) -> QltError {
    QltError::Shape(msg.into())
}
