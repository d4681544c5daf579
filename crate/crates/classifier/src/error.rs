use fenchel_nielsen::FnError;
use shear_fan::FanError;
use thiserror::Error;

/// Errors from series analysis and surface classification.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ClassifyError {
    /// Input outside the mathematical domain of the operation.
    #[error("{0}")]
    Domain(String),
    /// Fewer terms than the series analysis can act on.
    #[error("insufficient terms: {0}")]
    InsufficientTerms(String),
    /// Failure bubbled up from sequence derivation.
    #[error(transparent)]
    Sequences(#[from] FnError),
    /// Failure bubbled up from the fan machinery.
    #[error(transparent)]
    Fan(#[from] FanError),
}

impl ClassifyError {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        ClassifyError::Domain(msg.into())
    }
}
