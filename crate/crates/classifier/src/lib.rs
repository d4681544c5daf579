//! Convergence verdicts for the length series of symmetric surfaces and the
//! theorem dispatch that turns them into first/second-kind and
//! parabolic/non-parabolic classifications with recorded evidence.

mod classify;
mod error;
mod report;
mod series;

pub use classify::{classify, classify_end_surface, classify_flute, classify_slice};
pub use error::ClassifyError;
pub use report::{ClassificationReport, Evidence, KindVerdict, LabeledSeries, ParabolicVerdict};
pub use series::{series_verdict, series_verdict_log, SeriesStatus, SeriesVerdict, MIN_SERIES_TERMS};
