use fenchel_nielsen::FnError;
use hyperbolic_core::CoreError;
use thiserror::Error;

/// Errors from shear assembly, fan realization, and path measurement.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum FanError {
    /// Input outside the mathematical domain of the operation.
    #[error("{0}")]
    Domain(String),
    /// Too few shears or sequence terms for the requested size.
    #[error("insufficient data: {0}")]
    InsufficientData(String),
    /// Failure bubbled up from a geometric primitive.
    #[error(transparent)]
    Core(#[from] CoreError),
    /// Failure bubbled up from sequence derivation.
    #[error(transparent)]
    Sequences(#[from] FnError),
}

impl FanError {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        FanError::Domain(msg.into())
    }

    pub(crate) fn insufficient(msg: impl Into<String>) -> Self {
        FanError::InsufficientData(msg.into())
    }
}
