use crate::boundary::BoundaryPoint;
use crate::error::CoreError;

/// A complete geodesic recorded by its two distinct ideal endpoints, both in
/// the same boundary model.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Geodesic {
    a: BoundaryPoint,
    b: BoundaryPoint,
}

impl Geodesic {
    /// Builds a geodesic, rejecting coincident endpoints, mixed models, and
    /// non-finite coordinates.
    pub fn new(a: BoundaryPoint, b: BoundaryPoint) -> Result<Self, CoreError> {
        for p in [a, b] {
            match p {
                BoundaryPoint::Finite(x) if !x.is_finite() => {
                    return Err(CoreError::domain("geodesic endpoints must be finite numbers"));
                }
                BoundaryPoint::DiskAngle(t) if !t.is_finite() => {
                    return Err(CoreError::domain("geodesic endpoints must be finite numbers"));
                }
                _ => {}
            }
        }
        if a.is_half_plane() != b.is_half_plane() {
            return Err(CoreError::domain("geodesic endpoints must share a boundary model"));
        }
        if a == b {
            return Err(CoreError::domain("geodesic endpoints must be distinct"));
        }
        Ok(Geodesic { a, b })
    }

    /// The endpoint pair in construction order.
    pub fn endpoints(&self) -> (BoundaryPoint, BoundaryPoint) {
        (self.a, self.b)
    }
}

fn to_zero_infinity(a: BoundaryPoint, b: BoundaryPoint) -> crate::mobius::MobiusMap {
    use crate::mobius::MobiusMap;
    match (a, b) {
        (BoundaryPoint::Finite(p), BoundaryPoint::Finite(q)) => {
            MobiusMap { a: 1.0, b: -p, c: 1.0, d: -q }
        }
        (BoundaryPoint::Infinity, BoundaryPoint::Finite(q)) => {
            MobiusMap { a: 0.0, b: 1.0, c: 1.0, d: -q }
        }
        (BoundaryPoint::Finite(p), BoundaryPoint::Infinity) => {
            MobiusMap { a: 1.0, b: -p, c: 0.0, d: 1.0 }
        }
        _ => unreachable!("endpoints are distinct half-plane points"),
    }
}

/// Length of the common orthogeodesic segment between two disjoint
/// geodesics in the half-plane model.
///
/// The first geodesic is sent to `(0, inf)`; the images `p, q` of the second
/// must then share a sign, otherwise the geodesics cross or touch and the
/// result is a "not disjoint" error. A mirror symmetry moves both images to
/// the positive axis, and the pair `(x1, x2)` is taken to the concentric
/// position `(-w, w), (-1, 1)` by `z -> (z - g) / (z + g)` with
/// `g = sqrt(x1 x2)`, giving the distance `log(1) - log(w) =
/// -log1p(-2g / (x2 + g))`, the log of the ratio of nested radii.
pub fn ortho_distance(g1: &Geodesic, g2: &Geodesic) -> Result<f64, CoreError> {
    let (a1, b1) = g1.endpoints();
    let (a2, b2) = g2.endpoints();
    for p in [a1, b1, a2, b2] {
        if !p.is_half_plane() {
            return Err(CoreError::domain("ortho_distance requires half-plane endpoints"));
        }
    }
    if a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2 {
        return Err(CoreError::NotDisjoint("shared ideal endpoint".to_string()));
    }

    let m = to_zero_infinity(a1, b1);
    let p = match m.apply(a2) {
        BoundaryPoint::Finite(v) if v != 0.0 => v,
        _ => return Err(CoreError::NotDisjoint("endpoints numerically coincide".to_string())),
    };
    let q = match m.apply(b2) {
        BoundaryPoint::Finite(v) if v != 0.0 => v,
        _ => return Err(CoreError::NotDisjoint("endpoints numerically coincide".to_string())),
    };
    if (p < 0.0) != (q < 0.0) {
        return Err(CoreError::NotDisjoint("geodesics cross".to_string()));
    }
    let (p, q) = if p < 0.0 { (-p, -q) } else { (p, q) };
    let (x1, x2) = if p <= q { (p, q) } else { (q, p) };
    if x1 == x2 {
        return Err(CoreError::domain("geodesic images numerically coincide"));
    }
    let g = x1.sqrt() * x2.sqrt();
    Ok(-(-2.0 * g / (x2 + g)).ln_1p())
}
