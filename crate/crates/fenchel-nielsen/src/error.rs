use hyperbolic_core::CoreError;
use thiserror::Error;

/// Errors from surface descriptions and derived length data.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum FnError {
    /// Input outside the mathematical domain of the operation.
    #[error("{0}")]
    Domain(String),
    /// A generator or explicit list cannot supply the requested number of
    /// terms.
    #[error("insufficient data: {0}")]
    InsufficientData(String),
    /// Hexagon side data admits no common perpendicular. Unreachable for
    /// positive finite sides; kept as a guard against silent NaN propagation.
    #[error("inconsistent hexagon: {0}")]
    InconsistentHexagon(String),
    /// A surface description violates its own declared shape.
    #[error("{0}")]
    Validation(String),
    /// Failure bubbled up from a geometric primitive.
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl FnError {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        FnError::Domain(msg.into())
    }

    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        FnError::Validation(msg.into())
    }
}
