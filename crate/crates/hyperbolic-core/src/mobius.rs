use crate::boundary::BoundaryPoint;
use crate::error::CoreError;

/// A real 2x2 coefficient matrix acting on the half-plane ideal boundary as
/// `z -> (a z + b) / (c z + d)`.
///
/// Coefficients are meaningful only up to a common nonzero scale, and
/// [`MobiusMap::approx_eq`] compares projectively. Orientation-preserving
/// isometries have positive determinant; negative-determinant matrices are
/// still representable so misordered configurations surface through
/// downstream sign checks rather than being masked at construction.
#[derive(Clone, Copy, Debug)]
pub struct MobiusMap {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl MobiusMap {
    /// Builds a map from its coefficients, rejecting non-finite entries and
    /// zero determinant.
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self, CoreError> {
        if !(a.is_finite() && b.is_finite() && c.is_finite() && d.is_finite()) {
            return Err(CoreError::domain("mobius coefficients must be finite"));
        }
        let m = MobiusMap { a, b, c, d };
        let det = m.det();
        if det == 0.0 || !det.is_finite() {
            return Err(CoreError::domain("mobius determinant must be finite and nonzero"));
        }
        Ok(m)
    }

    /// The identity transformation.
    pub fn identity() -> Self {
        MobiusMap { a: 1.0, b: 0.0, c: 0.0, d: 1.0 }
    }

    /// Determinant `a d - b c` of the coefficient matrix.
    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    /// Coefficients divided by the largest absolute entry, fixing the scale
    /// without changing the transformation.
    pub fn renormalized(&self) -> Self {
        let s = self.a.abs().max(self.b.abs()).max(self.c.abs()).max(self.d.abs());
        MobiusMap { a: self.a / s, b: self.b / s, c: self.c / s, d: self.d / s }
    }

    /// Image of a half-plane boundary point.
    ///
    /// Total on the extended reals: a vanishing denominator yields infinity,
    /// and a quotient beyond f64 range saturates to infinity. For `|x| > 1`
    /// the quotient is evaluated as `(a + b/x) / (c + d/x)` so huge inputs
    /// cannot overflow intermediates.
    ///
    /// Panics when handed a disk-model point; convert first.
    pub fn apply(&self, p: BoundaryPoint) -> BoundaryPoint {
        match p {
            BoundaryPoint::DiskAngle(_) => {
                panic!("mobius maps act on half-plane boundary points")
            }
            BoundaryPoint::Infinity => quotient(self.a, self.c),
            BoundaryPoint::Finite(x) => {
                if x.abs() > 1.0 {
                    quotient(self.a + self.b / x, self.c + self.d / x)
                } else {
                    quotient(self.a * x + self.b, self.c * x + self.d)
                }
            }
        }
    }

    /// Composition `self . other` (apply `other` first), renormalized.
    pub fn compose(&self, other: &MobiusMap) -> MobiusMap {
        MobiusMap {
            a: self.a * other.a + self.b * other.c,
            b: self.a * other.b + self.b * other.d,
            c: self.c * other.a + self.d * other.c,
            d: self.c * other.b + self.d * other.d,
        }
        .renormalized()
    }

    /// Inverse transformation, valid up to scale.
    pub fn invert(&self) -> MobiusMap {
        MobiusMap { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }

    /// Image of the interior point `x + i y` under the transformation,
    /// evaluated with real arithmetic.
    ///
    /// For positive determinant the upper half-plane maps to itself; a
    /// negative determinant sends it to the lower half-plane.
    pub fn apply_interior(&self, x: f64, y: f64) -> (f64, f64) {
        let nr = self.a * x + self.b;
        let ni = self.a * y;
        let dr = self.c * x + self.d;
        let di = self.c * y;
        let den = dr * dr + di * di;
        ((nr * dr + ni * di) / den, (ni * dr - nr * di) / den)
    }

    /// Projective equality: all 2x2 minors of the stacked coefficient rows
    /// vanish relative to the operand scales within `tol`.
    pub fn approx_eq(&self, other: &MobiusMap, tol: f64) -> bool {
        let u = [self.a, self.b, self.c, self.d];
        let v = [other.a, other.b, other.c, other.d];
        let su = u.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        let sv = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        for i in 0..4 {
            for j in (i + 1)..4 {
                if (u[i] * v[j] - u[j] * v[i]).abs() > tol * su * sv {
                    return false;
                }
            }
        }
        true
    }
}

fn quotient(num: f64, den: f64) -> BoundaryPoint {
    if den == 0.0 {
        return BoundaryPoint::Infinity;
    }
    let q = num / den;
    if q.is_finite() {
        BoundaryPoint::Finite(q)
    } else {
        BoundaryPoint::Infinity
    }
}

/// Image of `p` under `m`; see [`MobiusMap::apply`].
pub fn mobius_apply(m: &MobiusMap, p: BoundaryPoint) -> BoundaryPoint {
    m.apply(p)
}

/// Composition `m1 . m2` (apply `m2` first); see [`MobiusMap::compose`].
pub fn mobius_compose(m1: &MobiusMap, m2: &MobiusMap) -> MobiusMap {
    m1.compose(m2)
}

/// Inverse of `m`; see [`MobiusMap::invert`].
pub fn mobius_invert(m: &MobiusMap) -> MobiusMap {
    m.invert()
}
