use classifier::ClassifyError;
use fenchel_nielsen::FnError;
use shear_fan::FanError;
use thiserror::Error;

/// Errors raised by configuration loading, sweeps, and rendering.
#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed or invalid configuration; the message carries a field path.
    #[error("config error: {0}")]
    Config(String),
    /// Invalid command arguments or data outside supported ranges.
    #[error("{0}")]
    Validation(String),
    /// Malformed CSV handed to the sweep parser.
    #[error("csv error: {0}")]
    Csv(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Sequences(#[from] FnError),
    #[error(transparent)]
    Fan(#[from] FanError),
}

impl CliError {
    pub(crate) fn config(msg: impl Into<String>) -> Self {
        CliError::Config(msg.into())
    }

    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        CliError::Validation(msg.into())
    }
}
