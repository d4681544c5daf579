//! Convergence verdicts for positive series from a finite prefix of terms.
//!
//! The analysis works entirely in the log domain so that terms as small as
//! `exp(-10_000)` still carry usable information. The decay exponent is
//! estimated from dyadic block sums rather than from individual terms, which
//! keeps the estimate stable when consecutive terms oscillate (as the
//! alternating-index sequences produced by interleaved cuff data do).

use hyperbolic_core::log_add_exp;

use crate::error::ClassifyError;

/// Minimum number of terms the block estimator accepts.
pub const MIN_SERIES_TERMS: usize = 100;

/// Outcome of the convergence analysis of a positive series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesStatus {
    /// The prefix is consistent with a divergent series.
    Divergent,
    /// The prefix is consistent with a convergent series.
    Convergent,
    /// The prefix does not decide at the requested tolerance.
    Indeterminate,
}

impl std::fmt::Display for SeriesStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = match self {
            SeriesStatus::Divergent => "DIVERGENT",
            SeriesStatus::Convergent => "CONVERGENT",
            SeriesStatus::Indeterminate => "INDETERMINATE",
        };
        f.write_str(tag)
    }
}

/// Verdict on a positive series, with the measurements that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesVerdict {
    /// Convergence call at the requested tolerance.
    pub status: SeriesStatus,
    /// Estimated decay exponent `p` in `t_n ~ n^(-p)`.
    pub exponent_estimate: f64,
    /// Partial sum of the analyzed prefix (`inf` if it overflows).
    pub partial_sum: f64,
    /// Natural log of the partial sum; always finite for nonempty input.
    pub log_partial_sum: f64,
    /// Number of terms the analysis consumed.
    pub n_terms_used: usize,
}

fn log_sum_exp(logs: &[f64]) -> f64 {
    logs.iter().copied().fold(f64::NEG_INFINITY, log_add_exp)
}

/// Classifies the series with the given positive terms.
///
/// Terms must be finite and strictly positive. Requires at least
/// [`MIN_SERIES_TERMS`] terms and a positive `tolerance` (the half-width of
/// the indeterminate band around exponent 1).
pub fn series_verdict(terms: &[f64], tolerance: f64) -> Result<SeriesVerdict, ClassifyError> {
    for (i, &t) in terms.iter().enumerate() {
        if !(t.is_finite() && t > 0.0) {
            return Err(ClassifyError::domain(format!(
                "series terms must be finite and positive: terms[{i}] = {t}"
            )));
        }
    }
    let logs: Vec<f64> = terms.iter().map(|t| t.ln()).collect();
    verdict_from_logs(&logs, tolerance)
}

/// Classifies the series whose terms are given as natural logs.
///
/// Entries must not be `NaN` or `+inf`; `-inf` is rejected because it encodes
/// a zero term. Requires at least [`MIN_SERIES_TERMS`] terms.
pub fn series_verdict_log(
    log_terms: &[f64],
    tolerance: f64,
) -> Result<SeriesVerdict, ClassifyError> {
    for (i, &t) in log_terms.iter().enumerate() {
        if t.is_nan() || t.is_infinite() {
            return Err(ClassifyError::domain(format!(
                "log terms must be finite: log_terms[{i}] = {t}"
            )));
        }
    }
    verdict_from_logs(log_terms, tolerance)
}

fn verdict_from_logs(logs: &[f64], tolerance: f64) -> Result<SeriesVerdict, ClassifyError> {
    if !(tolerance.is_finite() && tolerance > 0.0) {
        return Err(ClassifyError::domain(format!(
            "tolerance must be positive and finite, got {tolerance}"
        )));
    }
    let n = logs.len();
    if n < MIN_SERIES_TERMS {
        return Err(ClassifyError::InsufficientTerms(format!(
            "got {n} terms, need at least {MIN_SERIES_TERMS}"
        )));
    }

    // Dyadic checkpoints n/16 < n/8 < n/4 < n/2 < n and the log sums of the
    // four blocks between them. For t_k ~ k^(-p) the block sum over
    // (N/2, N] scales like N^(1-p), so the slope of log block sum against
    // log N estimates 1 - p.
    let checkpoints = [n / 16, n / 8, n / 4, n / 2, n];
    let mut xs = [0.0_f64; 4];
    let mut ys = [0.0_f64; 4];
    for j in 0..4 {
        xs[j] = (checkpoints[j + 1] as f64).ln();
        ys[j] = log_sum_exp(&logs[checkpoints[j]..checkpoints[j + 1]]);
    }
    let x_mean = xs.iter().sum::<f64>() / 4.0;
    let y_mean = ys.iter().sum::<f64>() / 4.0;
    let mut num = 0.0;
    let mut den = 0.0;
    for j in 0..4 {
        num += (xs[j] - x_mean) * (ys[j] - y_mean);
        den += (xs[j] - x_mean) * (xs[j] - x_mean);
    }
    let slope = num / den;
    let exponent = 1.0 - slope;

    let log_partial_sum = log_sum_exp(logs);
    let status = if exponent < 1.0 - tolerance {
        SeriesStatus::Divergent
    } else if exponent > 1.0 + tolerance {
        SeriesStatus::Convergent
    } else {
        // Borderline exponent. A series like 1/n still reveals itself by
        // bulk growth: the last 90 percent of the prefix carries a fixed
        // share of the partial sum when the series diverges.
        let log_head = log_sum_exp(&logs[..n / 10]);
        let growth = 1.0 - (log_head - log_partial_sum).exp();
        if growth > tolerance {
            SeriesStatus::Divergent
        } else {
            SeriesStatus::Indeterminate
        }
    };

    Ok(SeriesVerdict {
        status,
        exponent_estimate: exponent,
        partial_sum: log_partial_sum.exp(),
        log_partial_sum,
        n_terms_used: n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn power_terms(n: usize, p: f64) -> Vec<f64> {
        (1..=n).map(|k| (k as f64).powf(-p)).collect()
    }

    #[test]
    fn harmonic_series_diverges_via_growth_rule() {
        let v = series_verdict(&power_terms(100_000, 1.0), 0.1).unwrap();
        assert_eq!(v.status, SeriesStatus::Divergent);
        assert!(
            (v.exponent_estimate - 0.999976).abs() < 1e-4,
            "exponent {}",
            v.exponent_estimate
        );
        assert!((v.partial_sum - 12.090146129863428).abs() < 1e-9);
    }

    #[test]
    fn inverse_square_converges() {
        let v = series_verdict(&power_terms(100_000, 2.0), 0.1).unwrap();
        assert_eq!(v.status, SeriesStatus::Convergent);
        assert!((v.exponent_estimate - 1.999950).abs() < 1e-4);
    }

    #[test]
    fn exponent_three_halves_converges() {
        let v = series_verdict(&power_terms(100_000, 1.5), 0.1).unwrap();
        assert_eq!(v.status, SeriesStatus::Convergent);
        assert!((v.exponent_estimate - 1.499963).abs() < 1e-4);
    }

    #[test]
    fn square_root_decay_diverges() {
        let v = series_verdict(&power_terms(100_000, 0.5), 0.1).unwrap();
        assert_eq!(v.status, SeriesStatus::Divergent);
        assert!((v.exponent_estimate - 0.5).abs() < 1e-3);
    }

    #[test]
    fn constant_terms_diverge() {
        // 4800 is divisible by 16, so the dyadic blocks double exactly and
        // the fitted exponent is 0 up to rounding.
        let v = series_verdict(&vec![3.0; 4_800], 0.1).unwrap();
        assert_eq!(v.status, SeriesStatus::Divergent);
        assert!(v.exponent_estimate.abs() < 1e-9);
    }

    #[test]
    fn log_variant_handles_deep_underflow() {
        // Terms exp(-5000 k) vanish in f64 yet the log analysis still sees
        // geometric decay, far on the convergent side.
        let logs: Vec<f64> = (1..=200).map(|k| -5000.0 * k as f64).collect();
        let v = series_verdict_log(&logs, 0.1).unwrap();
        assert_eq!(v.status, SeriesStatus::Convergent);
        assert!(v.partial_sum == 0.0);
        assert!((v.log_partial_sum + 5000.0).abs() < 1e-9);
    }

    #[test]
    fn short_input_is_rejected_with_insufficient_terms() {
        let err = series_verdict(&power_terms(99, 1.0), 0.1).unwrap_err();
        assert!(err.to_string().contains("insufficient terms"));
        assert!(err.to_string().contains("need at least 100"));
    }

    #[test]
    fn bad_terms_are_rejected() {
        let mut terms = power_terms(200, 1.0);
        terms[17] = 0.0;
        assert!(series_verdict(&terms, 0.1).is_err());
        terms[17] = f64::NAN;
        assert!(series_verdict(&terms, 0.1).is_err());
        assert!(series_verdict_log(&vec![f64::NEG_INFINITY; 200], 0.1).is_err());
        assert!(series_verdict(&power_terms(200, 1.0), 0.0).is_err());
    }

    #[test]
    fn partial_sum_saturates_but_log_stays_finite() {
        let logs = vec![800.0_f64; 400];
        let v = series_verdict_log(&logs, 0.1).unwrap();
        assert_eq!(v.status, SeriesStatus::Divergent);
        assert!(v.partial_sum.is_infinite());
        assert!((v.log_partial_sum - (800.0 + (400.0_f64).ln())).abs() < 1e-9);
    }
}
