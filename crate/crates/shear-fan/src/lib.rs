//! Shear coordinates of nested geodesic fans and the piecewise horocyclic
//! paths that escape through them: assembling junction shears from length
//! data, realizing the fan in global coordinates, measuring arc lengths in
//! local frames, and reading the accumulation dichotomy (a single boundary
//! point against a limiting geodesic) off the results.

mod error;
mod escape;
mod fan;
mod path;
mod shears;
mod verdict;

pub use error::FanError;
pub use escape::{escape_path_estimate, EscapePathEstimate};
pub use fan::{realize_fan, GeodesicFan};
pub use path::{horocyclic_lengths, measure_path, HorocyclicPath};
pub use shears::{
    assemble_shears, shear_even, shear_odd, JunctionParity, OddResidue, ShearSequence,
};
pub use verdict::{
    accumulation_verdict, accumulation_verdict_with, fan_verdict_streaming, AccumulationOutcome,
    AccumulationVerdict, PathLengthEstimate, VerdictTolerances,
};
