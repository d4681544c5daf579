//! Command-line front end for the workspace: strict JSON run configurations,
//! classification reports in text or JSON, slice-plane sweeps to CSV, and
//! SVG rendering of geodesic fans with their escaping paths.

pub mod config;
pub mod csv;
pub mod emit;
pub mod error;
pub mod run;
pub mod svg;

pub use config::{
    canonical_value, load_config, ClassifyConfig, PathConfig, RenderConfig, RenderModel, RunConfig,
};
pub use csv::{parse_csv, sweep_slice, write_csv, SliceSweepRow, CSV_HEADER};
pub use emit::{fmt_f64, report_to_text, report_to_value, to_json_string};
pub use error::CliError;
pub use run::run_classify;
pub use svg::{render_fan_svg, FanRender};
