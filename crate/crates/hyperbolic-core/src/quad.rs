use crate::boundary::BoundaryPoint;
use crate::error::CoreError;
use crate::mobius::MobiusMap;

/// An ideal quadrilateral listed in counterclockwise circular order
/// `(A, B, C, D)` with distinguished diagonal `(B, D)`.
///
/// Construction checks that the vertices are pairwise distinct half-plane
/// points; the circular-order requirement is verified where it matters, in
/// [`shear_of_diagonal`], through the sign of the normalized image of `C`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IdealQuadrilateral {
    pub a: BoundaryPoint,
    pub b: BoundaryPoint,
    pub c: BoundaryPoint,
    pub d: BoundaryPoint,
}

impl IdealQuadrilateral {
    /// Builds a quadrilateral from four pairwise distinct half-plane points.
    pub fn new(
        a: BoundaryPoint,
        b: BoundaryPoint,
        c: BoundaryPoint,
        d: BoundaryPoint,
    ) -> Result<Self, CoreError> {
        let v = [a, b, c, d];
        for p in v {
            if !p.is_half_plane() {
                return Err(CoreError::domain(
                    "quadrilateral vertices must be half-plane boundary points",
                ));
            }
            if let BoundaryPoint::Finite(x) = p {
                if !x.is_finite() {
                    return Err(CoreError::DegenerateQuadrilateral(
                        "non-finite vertex coordinate".to_string(),
                    ));
                }
            }
        }
        for i in 0..4 {
            for j in (i + 1)..4 {
                if v[i] == v[j] {
                    return Err(CoreError::DegenerateQuadrilateral(
                        "coincident vertices".to_string(),
                    ));
                }
            }
        }
        Ok(IdealQuadrilateral { a, b, c, d })
    }
}

/// The Mobius map sending the quadrilateral's `B` to `0`, `D` to `inf`, and
/// `A` to `-1`.
///
/// In the generic finite case this is `z -> k (z - B) / (z - D)` with
/// `k = -(A - D) / (A - B)`; when one of `A`, `B`, `D` is infinite the
/// corresponding limit map is used. `C` plays no role here.
pub fn normalizing_map(q: &IdealQuadrilateral) -> Result<MobiusMap, CoreError> {
    use BoundaryPoint::{Finite, Infinity};
    let m = match (q.a, q.b, q.d) {
        (Finite(a), Finite(b), Finite(d)) => {
            let k = -(a - d) / (a - b);
            if !k.is_finite() || k == 0.0 {
                return Err(CoreError::DegenerateQuadrilateral(
                    "normalization collapses".to_string(),
                ));
            }
            MobiusMap { a: k, b: -k * b, c: 1.0, d: -d }
        }
        (Finite(a), Finite(b), Infinity) => MobiusMap { a: 1.0, b: -b, c: 0.0, d: b - a },
        (Finite(a), Infinity, Finite(d)) => MobiusMap { a: 0.0, b: d - a, c: 1.0, d: -d },
        (Infinity, Finite(b), Finite(d)) => MobiusMap { a: -1.0, b, c: 1.0, d: -d },
        _ => unreachable!("vertices are pairwise distinct"),
    };
    let m = m.renormalized();
    let det = m.det();
    if det == 0.0 || !det.is_finite() {
        return Err(CoreError::DegenerateQuadrilateral(
            "normalization collapses".to_string(),
        ));
    }
    Ok(m)
}

/// Shear of the quadrilateral along its diagonal `(B, D)`: the log of the
/// image of `C` under the normalizing map.
///
/// After sending `B -> 0`, `D -> inf`, `A -> -1`, a vertex order that is
/// genuinely circular places `C` on the positive axis; a zero or negative
/// image reports "vertices not in circular order". The value is invariant
/// under Mobius maps of the quadrilateral and under rotating the labels by
/// two (reversing the diagonal).
pub fn shear_of_diagonal(q: &IdealQuadrilateral) -> Result<f64, CoreError> {
    let m = normalizing_map(q)?;
    match m.apply(q.c) {
        BoundaryPoint::Finite(v) if v > 0.0 => Ok(v.ln()),
        BoundaryPoint::Finite(_) => Err(CoreError::NotCircularlyOrdered(
            "normalized image of C is not positive".to_string(),
        )),
        BoundaryPoint::Infinity => Err(CoreError::DegenerateQuadrilateral(
            "image of C escapes to infinity".to_string(),
        )),
        BoundaryPoint::DiskAngle(_) => unreachable!("vertices are half-plane points"),
    }
}
