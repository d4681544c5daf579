use crate::error::FanError;
use crate::fan::{GeodesicFan, JunctionWalker};
use crate::path::HorocyclicPath;
use crate::shears::ShearSequence;
use hyperbolic_core::{cayley_to_disk, disk_angle_distance, log_add_exp};
use std::fmt;

/// Decision thresholds for [`accumulation_verdict_with`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VerdictTolerances {
    /// Endpoint gaps below this (disk angle) count as collapsed.
    pub gap_tol: f64,
    /// Cumulative lengths above this count as diverging.
    pub divergence_floor: f64,
    /// Trailing arc increments below this count as Cauchy-settled.
    pub cauchy_tol: f64,
}

impl Default for VerdictTolerances {
    fn default() -> Self {
        VerdictTolerances { gap_tol: 1e-6, divergence_floor: 1e3, cauchy_tol: 1e-9 }
    }
}

/// What the realized fan and measured path jointly indicate about the
/// accumulation set of the fan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AccumulationOutcome {
    /// Endpoints collapse while the path length diverges: the fan
    /// accumulates at one boundary point.
    SinglePoint,
    /// Endpoints stay separated while the path length settles: the fan
    /// accumulates on a limiting geodesic.
    GeodesicLimit,
    /// Neither pattern is established at this depth.
    Indeterminate,
}

impl fmt::Display for AccumulationOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AccumulationOutcome::SinglePoint => "SINGLE_POINT",
            AccumulationOutcome::GeodesicLimit => "GEODESIC_LIMIT",
            AccumulationOutcome::Indeterminate => "INDETERMINATE",
        };
        f.write_str(s)
    }
}

/// Path length reported by a verdict.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PathLengthEstimate {
    Finite(f64),
    Diverging,
}

/// Joint reading of a fan's endpoint gap and its path's cumulative length.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AccumulationVerdict {
    pub outcome: AccumulationOutcome,
    /// Disk-angle distance between the last geodesic's endpoints.
    pub endpoint_gap: f64,
    /// Cumulative path length, or its divergence marker.
    pub path_length: PathLengthEstimate,
    /// Largest of the trailing arc lengths used for the Cauchy check.
    pub last_increment: f64,
    /// Number of geodesics the reading is based on.
    pub n_geodesics: usize,
}

/// Trailing arc lengths feeding the Cauchy check: one junction of each
/// residue class mod 4 can carry an atypically small arc, so a single last
/// increment would misread one quiet arc as convergence.
const CAUCHY_WINDOW: usize = 4;

fn decide(
    gap: f64,
    diverging: bool,
    total: f64,
    increment: f64,
    n_geodesics: usize,
    t: &VerdictTolerances,
) -> AccumulationVerdict {
    let outcome = if gap < t.gap_tol && diverging {
        AccumulationOutcome::SinglePoint
    } else if gap >= t.gap_tol && !diverging && increment < t.cauchy_tol {
        AccumulationOutcome::GeodesicLimit
    } else {
        AccumulationOutcome::Indeterminate
    };
    AccumulationVerdict {
        outcome,
        endpoint_gap: gap,
        path_length: if diverging {
            PathLengthEstimate::Diverging
        } else {
            PathLengthEstimate::Finite(total)
        },
        last_increment: increment,
        n_geodesics,
    }
}

/// [`accumulation_verdict_with`] under default divergence and Cauchy
/// thresholds, with the endpoint gap tolerance supplied by the caller.
pub fn accumulation_verdict(
    fan: &GeodesicFan,
    path: &HorocyclicPath,
    gap_tol: f64,
) -> AccumulationVerdict {
    accumulation_verdict_with(fan, path, &VerdictTolerances { gap_tol, ..Default::default() })
}

/// Reads the dichotomy off a realized fan and its measured path: collapsed
/// endpoints with diverging length mean a single accumulation point,
/// separated endpoints with settled (Cauchy) length mean a limiting
/// geodesic, and anything else is indeterminate at this depth.
pub fn accumulation_verdict_with(
    fan: &GeodesicFan,
    path: &HorocyclicPath,
    t: &VerdictTolerances,
) -> AccumulationVerdict {
    let gap = fan.last_endpoint_gap();
    let total = path.total();
    let diverging = path.saturated || total > t.divergence_floor;
    let increment = path
        .log_lengths
        .iter()
        .rev()
        .take(CAUCHY_WINDOW)
        .fold(0.0f64, |m, &l| m.max(l.exp()));
    decide(gap, diverging, total, increment, fan.len(), t)
}

/// Verdict for a fan too deep to materialize: runs the same junction walk
/// with constant memory, reading arc lengths from the closed-form
/// alternating sums instead of storing the fan and path.
pub fn fan_verdict_streaming(
    sh: &ShearSequence,
    n_terms: usize,
    t: &VerdictTolerances,
) -> Result<AccumulationVerdict, FanError> {
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
    let mut walker = JunctionWalker::new();
    let mut running = sh.s1();
    let mut log_cum = -running;
    let mut window = [f64::NEG_INFINITY; CAUCHY_WINDOW];
    window[0] = -running;
    let mut filled = 1usize;
    let mut n_geodesics = 2usize;
    let mut stop = n_terms;
    for m in 2..n_terms {
        let s = sh.shear(m).expect("checked above");
        let c = s.exp();
        if !c.is_finite() || c <= 0.0 {
            stop = m;
            break;
        }
        walker.step(m, c);
        running += s;
        let ll = if m % 2 == 0 { running } else { -running };
        log_cum = log_add_exp(log_cum, ll);
        window[filled % CAUCHY_WINDOW] = ll;
        filled += 1;
        n_geodesics = m + 1;
    }
    let (a, b) = walker.close(stop);
    let ta = cayley_to_disk(a).disk_angle().expect("half-plane point");
    let tb = cayley_to_disk(b).disk_angle().expect("half-plane point");
    let gap = disk_angle_distance(ta, tb);
    let total = log_cum.exp();
    let diverging = total.is_infinite() || total > t.divergence_floor;
    let increment = window
        .iter()
        .take(filled.min(CAUCHY_WINDOW))
        .fold(0.0f64, |m, &l| m.max(l.exp()));
    Ok(decide(gap, diverging, total, increment, n_geodesics, t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::realize_fan;
    use crate::path::{horocyclic_lengths, measure_path};

    #[test]
    fn zero_shear_fan_is_a_single_point() {
        let n = 400usize;
        let sh = ShearSequence::new(0.0, vec![0.0; n]).unwrap();
        let fan = realize_fan(&sh, n + 1).unwrap();
        let path = measure_path(&fan, 0.0).unwrap();
        let v = accumulation_verdict_with(&fan, &path, &VerdictTolerances {
            divergence_floor: 100.0,
            ..Default::default()
        });
        assert_eq!(v.outcome, AccumulationOutcome::SinglePoint);
        assert!(v.endpoint_gap < 1e-6);
        assert_eq!(v.path_length, PathLengthEstimate::Diverging);
    }

    #[test]
    fn streaming_agrees_with_materialized() {
        let shears: Vec<f64> = (0..240)
            .map(|i| 0.8 * ((i * 37 + 11) % 97) as f64 / 97.0 - 0.4)
            .collect();
        let sh = ShearSequence::new(0.25, shears).unwrap();
        let n = 200usize;
        let fan = realize_fan(&sh, n).unwrap();
        let path = horocyclic_lengths(&sh, n - 1).unwrap();
        let t = VerdictTolerances::default();
        let direct = accumulation_verdict_with(&fan, &path, &t);
        let streamed = fan_verdict_streaming(&sh, n, &t).unwrap();
        assert_eq!(direct.outcome, streamed.outcome);
        assert!((direct.endpoint_gap - streamed.endpoint_gap).abs() <= 1e-12);
        assert_eq!(direct.n_geodesics, streamed.n_geodesics);
        match (direct.path_length, streamed.path_length) {
            (PathLengthEstimate::Finite(x), PathLengthEstimate::Finite(y)) => {
                assert!((x - y).abs() <= 1e-9 * x.abs().max(1.0));
            }
            (a, b) => assert_eq!(a, b),
        }
    }

    #[test]
    fn verdict_never_contradicts_path_length() {
        for seed in 0..24u64 {
            let shears: Vec<f64> = (0..160)
                .map(|i| {
                    let k = (i as u64).wrapping_mul(6364136223846793005).wrapping_add(seed);
                    ((k >> 33) % 2000) as f64 / 500.0 - 2.0
                })
                .collect();
            let sh = ShearSequence::new(0.0, shears).unwrap();
            let fan = realize_fan(&sh, 150).unwrap();
            let path = measure_path(&fan, 0.0).unwrap();
            let v = accumulation_verdict(&fan, &path, 1e-6);
            match v.outcome {
                AccumulationOutcome::SinglePoint => {
                    assert_eq!(v.path_length, PathLengthEstimate::Diverging);
                }
                AccumulationOutcome::GeodesicLimit => {
                    assert!(matches!(v.path_length, PathLengthEstimate::Finite(_)));
                }
                AccumulationOutcome::Indeterminate => {}
            }
        }
    }
}
