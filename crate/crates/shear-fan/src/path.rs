use crate::error::FanError;
use crate::fan::GeodesicFan;
use crate::shears::{JunctionParity, ShearSequence};
use hyperbolic_core::log_add_exp;

/// Horocyclic arc lengths along the escaping path, kept in log form so deep
/// fans cannot overflow, together with cumulative sums.
#[derive(Clone, Debug, PartialEq)]
pub struct HorocyclicPath {
    /// Log of each arc length, first arc first.
    pub log_lengths: Vec<f64>,
    /// Cumulative length in linear scale; saturates at `f64::INFINITY`.
    pub cumulative: Vec<f64>,
    /// Cumulative length in log scale, exact even past linear saturation.
    pub log_cumulative: Vec<f64>,
    /// True when the linear cumulative overflowed.
    pub saturated: bool,
    /// Junction at which measurement lost resolution, if it stopped early.
    pub truncation: Option<usize>,
}

impl HorocyclicPath {
    /// Number of arcs.
    pub fn len(&self) -> usize {
        self.log_lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.log_lengths.is_empty()
    }

    /// Total length in linear scale (`INFINITY` once saturated).
    pub fn total(&self) -> f64 {
        *self.cumulative.last().expect("path has at least one arc")
    }

    fn from_logs(log_lengths: Vec<f64>, truncation: Option<usize>) -> Self {
        let mut cumulative = Vec::with_capacity(log_lengths.len());
        let mut log_cumulative = Vec::with_capacity(log_lengths.len());
        let mut running = f64::NEG_INFINITY;
        let mut saturated = false;
        for &ll in &log_lengths {
            running = log_add_exp(running, ll);
            let lin = running.exp();
            if lin.is_infinite() {
                saturated = true;
            }
            cumulative.push(lin);
            log_cumulative.push(running);
        }
        HorocyclicPath { log_lengths, cumulative, log_cumulative, saturated, truncation }
    }
}

/// Arc lengths of the escaping path from the alternating shear sums: the
/// first arc has length `exp(-s1)`, and with `S_m = s1 + s_2 + ... + s_m`
/// the arc at junction `m` has length `exp(-S_m)` for odd `m` and
/// `exp(S_m)` for even `m`.
///
/// `n_terms` may not exceed the available shears plus one.
pub fn horocyclic_lengths(sh: &ShearSequence, n_terms: usize) -> Result<HorocyclicPath, FanError> {
    if n_terms == 0 {
        return Err(FanError::domain("the path needs at least one arc"));
    }
    if n_terms > sh.max_junction() {
        return Err(FanError::insufficient(format!(
            "{} arcs need shears through junction {}, have {}",
            n_terms,
            n_terms,
            sh.max_junction()
        )));
    }
    let mut logs = Vec::with_capacity(n_terms);
    let mut running = sh.s1();
    logs.push(-running);
    for m in 2..=n_terms {
        running += sh.shear(m).expect("checked above");
        logs.push(if m % 2 == 0 { running } else { -running });
    }
    Ok(HorocyclicPath::from_logs(logs, None))
}

/// Measures the escaping path geometrically, junction by junction, in each
/// junction's local frame.
///
/// The walk enters junction `m` on the current geodesic at height `y` (with
/// `y = exp(-s1)` at junction 2, pinned by the anchor). At an even junction
/// the wedge vertex sits at local infinity, the neighbouring geodesics are
/// the vertical lines `x = 0` and `x = c`, and the horocyclic arc between
/// them has length `c / y`; at an odd junction the vertex sits at local `0`,
/// and inverting through `z -> -1/z` turns the wedge into vertical lines
/// `x = 0`, `x = -1/c` crossed at height `1/y`, giving length `y / c`. Both
/// transitions hand the next junction the entry height `y / c`.
///
/// The first arc is the anchor's definition, so it is recorded from `s1`
/// directly; every later arc comes from the measured width and height. If
/// the entry height or an arc length leaves the positive floating range the
/// measurement stops and records the junction as its truncation point
/// (resolution exhausted). A truncation already present in the fan is
/// inherited.
pub fn measure_path(fan: &GeodesicFan, s1: f64) -> Result<HorocyclicPath, FanError> {
    if !s1.is_finite() {
        return Err(FanError::domain("s1 must be finite"));
    }
    let mut y = (-s1).exp();
    if !y.is_finite() || y <= 0.0 {
        return Err(FanError::domain(format!("exp(-s1) out of floating range for s1 = {s1}")));
    }
    let mut logs = Vec::with_capacity(fan.junction_count() + 1);
    logs.push(-s1);
    let mut truncation = fan.truncation();
    for idx in 0..fan.junction_count() {
        let m = idx + 2;
        let c = fan.width(m).expect("width stored for walked junction");
        let len = match fan.parity(m).expect("parity stored for walked junction") {
            JunctionParity::Even => c / y,
            JunctionParity::Odd => y / c,
        };
        if !len.is_finite() || len <= 0.0 {
            truncation = Some(m);
            break;
        }
        logs.push(len.ln());
        y /= c;
        if !y.is_finite() || y <= 0.0 {
            if m + 1 <= fan.junction_count() + 1 {
                truncation = Some(m + 1);
            }
            break;
        }
    }
    Ok(HorocyclicPath::from_logs(logs, truncation))
}
