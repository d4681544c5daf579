use crate::error::FanError;
use crate::shears::{JunctionParity, ShearSequence};
use hyperbolic_core::{
    cayley_to_disk, disk_angle_distance, BoundaryPoint, Geodesic, IdealQuadrilateral, MobiusMap,
};

/// Frame-to-global state of the junction walk.
///
/// In the frame of junction `m` the current geodesic is `(0, inf)`; at even
/// junctions the previous geodesic is `(-1, 0)` and the next `(c, inf)`, at
/// odd junctions the previous is `(-1, inf)` and the next `(0, c)`, where
/// `c = exp(s_m)`. The walk starts in the frame of junction 2 with the global
/// anchors `g1 = (0, inf)`, `g2 = (inf, -1)`.
pub(crate) struct JunctionWalker {
    g: MobiusMap,
    vprev: BoundaryPoint,
}

impl JunctionWalker {
    pub(crate) fn new() -> Self {
        JunctionWalker {
            g: MobiusMap { a: -1.0, b: -1.0, c: 1.0, d: 0.0 },
            vprev: BoundaryPoint::Infinity,
        }
    }

    /// Global position of the endpoint junction `m` places: the wedge vertex
    /// sits at local `inf` for even `m` and local `0` for odd `m`.
    fn placed_endpoint(&self, m: usize) -> BoundaryPoint {
        match JunctionParity::of_junction(m) {
            JunctionParity::Even => self.g.apply(BoundaryPoint::Infinity),
            JunctionParity::Odd => self.g.apply(BoundaryPoint::Finite(0.0)),
        }
    }

    /// Executes junction `m` with width `c = exp(s_m)`: returns `g_m` as a
    /// global endpoint pair and advances the frame.
    pub(crate) fn step(&mut self, m: usize, c: f64) -> (BoundaryPoint, BoundaryPoint) {
        let vm = self.placed_endpoint(m);
        let tinv = match JunctionParity::of_junction(m) {
            JunctionParity::Even => MobiusMap { a: c, b: c, c: 0.0, d: 1.0 },
            JunctionParity::Odd => MobiusMap { a: c, b: 0.0, c: 1.0, d: 1.0 },
        };
        self.g = self.g.compose(&tinv);
        let pair = (self.vprev, vm);
        self.vprev = vm;
        pair
    }

    /// The closing geodesic `g_m` when the walk stops before junction `m`.
    pub(crate) fn close(&self, m: usize) -> (BoundaryPoint, BoundaryPoint) {
        (self.vprev, self.placed_endpoint(m))
    }
}

/// A nested fan of geodesics realized from shear coordinates, anchored on
/// `g1 = (0, inf)` and `g2 = (inf, -1)`.
///
/// Endpoints are stored as raw pairs rather than checked [`Geodesic`]
/// values: when the fan accumulates to a single boundary point the endpoint
/// separation sinks below one f64 ulp within a few dozen terms, and that
/// collapse is exactly the signal the accumulation verdict reads. Use
/// [`GeodesicFan::geodesic`] to rebuild a checked value where endpoints are
/// still distinct.
#[derive(Clone, Debug)]
pub struct GeodesicFan {
    endpoints: Vec<(BoundaryPoint, BoundaryPoint)>,
    parities: Vec<JunctionParity>,
    widths: Vec<f64>,
    truncation: Option<usize>,
}

impl GeodesicFan {
    /// Number of geodesics, counting `g1`.
    pub fn len(&self) -> usize {
        self.endpoints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.endpoints.is_empty()
    }

    /// Raw endpoint pair of `g_{i+1}`, ordered (shared with previous, shared
    /// with next).
    pub fn endpoints(&self, i: usize) -> Option<(BoundaryPoint, BoundaryPoint)> {
        self.endpoints.get(i).copied()
    }

    /// Checked geodesic `g_{i+1}`; errors once endpoints have collapsed.
    pub fn geodesic(&self, i: usize) -> Result<Geodesic, FanError> {
        let (a, b) = self
            .endpoints
            .get(i)
            .copied()
            .ok_or_else(|| FanError::domain(format!("geodesic index {i} out of range")))?;
        Ok(Geodesic::new(a, b)?)
    }

    /// Parity of junction `m`, for `2 <= m <= junction_count() + 1`.
    pub fn parity(&self, m: usize) -> Option<JunctionParity> {
        if m < 2 {
            return None;
        }
        self.parities.get(m - 2).copied()
    }

    /// Wedge width `exp(s_m)` at junction `m` in its local frame.
    pub fn width(&self, m: usize) -> Option<f64> {
        if m < 2 {
            return None;
        }
        self.widths.get(m - 2).copied()
    }

    /// Number of junctions walked; junction indices run `2 ..= count + 1`.
    pub fn junction_count(&self) -> usize {
        self.parities.len()
    }

    /// Junction whose width fell out of floating range, if any.
    pub fn truncation(&self) -> Option<usize> {
        self.truncation
    }

    /// Disk-model angular distance between the two endpoints of the last
    /// geodesic; `0` once they have fully collapsed.
    pub fn last_endpoint_gap(&self) -> f64 {
        let (a, b) = *self.endpoints.last().expect("fan has at least two geodesics");
        let ta = cayley_to_disk(a).disk_angle().expect("half-plane point");
        let tb = cayley_to_disk(b).disk_angle().expect("half-plane point");
        disk_angle_distance(ta, tb)
    }

    /// The wedge of junction `m` in its own frame: the ideal quadrilateral
    /// `(-1, 0, exp(s_m), inf)` whose diagonal is `g_m`.
    pub fn junction_quad_local(&self, m: usize) -> Result<IdealQuadrilateral, FanError> {
        let c = self
            .width(m)
            .ok_or_else(|| FanError::domain(format!("junction {m} not walked")))?;
        Ok(IdealQuadrilateral::new(
            BoundaryPoint::Finite(-1.0),
            BoundaryPoint::Finite(0.0),
            BoundaryPoint::Finite(c),
            BoundaryPoint::Infinity,
        )?)
    }

    /// The wedge of junction `m` in global coordinates, with diagonal `g_m`:
    /// the free endpoint of `g_{m-1}`, the two endpoints of `g_m` (order set
    /// by parity), and the free endpoint of `g_{m+1}`, in circular order.
    pub fn junction_quad_global(&self, m: usize) -> Result<IdealQuadrilateral, FanError> {
        if m < 2 || m + 1 > self.len() {
            return Err(FanError::domain(format!(
                "junction {m} needs geodesics {} through {}",
                m - 1,
                m + 1
            )));
        }
        let prev = self.endpoints[m - 2];
        let cur = self.endpoints[m - 1];
        let next = self.endpoints[m];
        let (b, d) = match JunctionParity::of_junction(m) {
            JunctionParity::Even => (cur.0, cur.1),
            JunctionParity::Odd => (cur.1, cur.0),
        };
        Ok(IdealQuadrilateral::new(prev.0, b, next.1, d)?)
    }
}

/// Realizes the first `n_terms` geodesics of the fan with the given shears.
///
/// Junctions `2 ..= n_terms - 1` are walked in their local frames and mapped
/// to global coordinates; if some width `exp(s_m)` falls outside the positive
/// floating range the walk stops there, the fan closes with the last
/// placeable geodesic, and the junction index is recorded as the truncation
/// point (resolution exhausted).
pub fn realize_fan(sh: &ShearSequence, n_terms: usize) -> Result<GeodesicFan, FanError> {
    if n_terms < 2 {
        return Err(FanError::domain("a fan needs at least two geodesics"));
    }
    if sh.max_junction() < n_terms - 1 {
        return Err(FanError::insufficient(format!(
            "{} geodesics need shears through junction {}, have {}",
            n_terms,
            n_terms - 1,
            sh.max_junction()
        )));
    }
    let mut fan = GeodesicFan {
        endpoints: Vec::with_capacity(n_terms),
        parities: Vec::with_capacity(n_terms.saturating_sub(2)),
        widths: Vec::with_capacity(n_terms.saturating_sub(2)),
        truncation: None,
    };
    fan.endpoints.push((BoundaryPoint::Finite(0.0), BoundaryPoint::Infinity));
    let mut walker = JunctionWalker::new();
    let mut stop = n_terms;
    for m in 2..n_terms {
        let c = sh.shear(m).expect("checked above").exp();
        if !c.is_finite() || c <= 0.0 {
            fan.truncation = Some(m);
            stop = m;
            break;
        }
        fan.endpoints.push(walker.step(m, c));
        fan.parities.push(JunctionParity::of_junction(m));
        fan.widths.push(c);
    }
    fan.endpoints.push(walker.close(stop));
    Ok(fan)
}
