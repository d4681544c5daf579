use std::f64::consts::TAU;
use std::fmt;

/// A point on the ideal boundary of the hyperbolic plane.
///
/// Half-plane boundary points are real numbers together with the point at
/// infinity, which is kept as an explicit variant so no floating sentinel can
/// leak into arithmetic. Disk boundary points are angles on the unit circle,
/// normalized to `[0, 2*pi)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BoundaryPoint {
    /// A finite point on the real axis (half-plane model).
    Finite(f64),
    /// The point at infinity (half-plane model).
    Infinity,
    /// An angle on the unit circle (disk model).
    DiskAngle(f64),
}

impl BoundaryPoint {
    /// True for `Finite` and `Infinity`, the two half-plane variants.
    pub fn is_half_plane(&self) -> bool {
        !matches!(self, BoundaryPoint::DiskAngle(_))
    }

    /// The underlying real coordinate of a finite half-plane point.
    pub fn finite_value(&self) -> Option<f64> {
        match self {
            BoundaryPoint::Finite(x) => Some(*x),
            _ => None,
        }
    }

    /// The underlying angle of a disk point.
    pub fn disk_angle(&self) -> Option<f64> {
        match self {
            BoundaryPoint::DiskAngle(t) => Some(*t),
            _ => None,
        }
    }
}

impl fmt::Display for BoundaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryPoint::Finite(x) => write!(f, "{x}"),
            BoundaryPoint::Infinity => write!(f, "inf"),
            BoundaryPoint::DiskAngle(t) => write!(f, "angle({t})"),
        }
    }
}

fn normalize_angle(mut theta: f64) -> f64 {
    if theta.is_sign_negative() {
        theta += TAU;
        if theta >= TAU {
            theta = 0.0;
        }
    }
    if theta >= TAU {
        theta -= TAU;
    }
    theta
}

/// Maps a half-plane boundary point to its disk-model angle under the Cayley
/// transform `z -> (z - i) / (z + i)`.
///
/// For a real point `x` the image is `(x^2 - 1 - 2xi) / (x^2 + 1)`, so the
/// angle is `atan2(-2x, x^2 - 1)`; for `|x| > 1` numerator and denominator
/// are rescaled by `|x|` to keep full precision at huge inputs. Infinity maps
/// to angle `0`, zero to `pi`. Disk points pass through unchanged.
pub fn cayley_to_disk(p: BoundaryPoint) -> BoundaryPoint {
    match p {
        BoundaryPoint::DiskAngle(t) => BoundaryPoint::DiskAngle(normalize_angle(t)),
        BoundaryPoint::Infinity => BoundaryPoint::DiskAngle(0.0),
        BoundaryPoint::Finite(x) => {
            let theta = if x.abs() <= 1.0 {
                (-2.0 * x).atan2(x * x - 1.0)
            } else {
                (-2.0 * x.signum()).atan2(x.abs() - 1.0 / x.abs())
            };
            BoundaryPoint::DiskAngle(normalize_angle(theta))
        }
    }
}

/// Inverse of [`cayley_to_disk`]: angle `0` returns to infinity, any other
/// angle `t` returns to the real point `-cos(t/2) / sin(t/2)`. Half-plane
/// points pass through unchanged.
pub fn cayley_from_disk(p: BoundaryPoint) -> BoundaryPoint {
    match p {
        BoundaryPoint::DiskAngle(t) => {
            let t = normalize_angle(t);
            if t == 0.0 {
                BoundaryPoint::Infinity
            } else {
                let half = 0.5 * t;
                BoundaryPoint::Finite(-half.cos() / half.sin())
            }
        }
        other => other,
    }
}

/// Shorter circular distance between two disk angles, in `[0, pi]`.
pub fn disk_angle_distance(t1: f64, t2: f64) -> f64 {
    let d = (normalize_angle(t1) - normalize_angle(t2)).abs();
    d.min(TAU - d)
}

/// Maps an interior half-plane point `x + i y` (with `y > 0`) to its unit
/// disk image under the same Cayley transform `z -> (z - i) / (z + i)` used
/// for boundary points, returned as Cartesian disk coordinates.
pub fn cayley_interior(x: f64, y: f64) -> (f64, f64) {
    let den = x * x + (y + 1.0) * (y + 1.0);
    ((x * x + y * y - 1.0) / den, -2.0 * x / den)
}
