//! Fenchel-Nielsen descriptions of symmetric infinite-type surfaces and the
//! length sequences derived from them: cuff lengths from closed-form
//! generators or explicit lists, orthogeodesic distances between consecutive
//! cuffs from pentagon and hexagon relations, and alternating length sums.

mod error;
mod sequences;
mod spec;

pub use error::FnError;
pub use sequences::{
    derive_sequences, eta_hexagon, eta_pentagon, sigma_sequence, slice_lengths, LengthSequences,
};
pub use spec::{CuffLengths, SliceParams, SurfaceKind, SurfaceSpec, Twists};
