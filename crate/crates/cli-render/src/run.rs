//! Dispatch from a validated run configuration to a classification report.

use classifier::{classify, ClassificationReport};

use crate::config::RunConfig;
use crate::error::CliError;

/// Classifies the configured surface at the configured series depth and
/// tolerance.
pub fn run_classify(cfg: &RunConfig) -> Result<ClassificationReport, CliError> {
    Ok(classify(&cfg.surface, cfg.classify.n_terms, cfg.classify.tolerance)?)
}
