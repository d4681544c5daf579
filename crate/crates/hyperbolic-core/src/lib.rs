//! Primitives for plane hyperbolic geometry in the upper half-plane and
//! unit-disk models: ideal boundary points, real Mobius transformations,
//! geodesics with orthogeodesic distances, ideal quadrilaterals with shear
//! coordinates, and numerically stable trigonometric kernels.

mod boundary;
mod error;
mod geodesic;
mod mobius;
mod quad;
mod trig;

pub use boundary::{
    cayley_from_disk, cayley_interior, cayley_to_disk, disk_angle_distance, BoundaryPoint,
};
pub use error::CoreError;
pub use geodesic::{ortho_distance, Geodesic};
pub use mobius::{mobius_apply, mobius_compose, mobius_invert, MobiusMap};
pub use quad::{normalizing_map, shear_of_diagonal, IdealQuadrilateral};
pub use trig::{lambert_side, log_add_exp, log_cosh, log_sinh, saccheri_summit};
