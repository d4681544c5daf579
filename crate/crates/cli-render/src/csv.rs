//! Parameter sweep over the two-parameter length family and its CSV
//! round-trip.

use classifier::{series_verdict_log, ParabolicVerdict, SeriesStatus, MIN_SERIES_TERMS};
use fenchel_nielsen::{sigma_sequence, slice_lengths, SliceParams};
use rayon::prelude::*;

use crate::emit::fmt_f64;
use crate::error::CliError;

/// One grid point of a slice sweep: the numeric series reading next to the
/// closed-form verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct SliceSweepRow {
    pub a: f64,
    pub b: f64,
    pub min_ab: f64,
    pub exponent_estimate: f64,
    pub numeric_verdict: ParabolicVerdict,
    pub closed_form_verdict: ParabolicVerdict,
    /// True when the numeric verdict matches the closed form or abstains.
    pub agree: bool,
}

/// The exact CSV header for sweep output.
pub const CSV_HEADER: &str =
    "a,b,min_ab,exponent_estimate,numeric_verdict,closed_form_verdict,agree";

fn axis(lo: f64, hi: f64, step: f64, name: &str) -> Result<Vec<f64>, CliError> {
    for (label, v) in [("0", lo), ("1", hi)] {
        if !(v.is_finite() && v > 0.0) {
            return Err(CliError::validation(format!(
                "{name}{label} must be positive and finite, got {v}"
            )));
        }
    }
    if !(step.is_finite() && step > 0.0) {
        return Err(CliError::validation(format!("step must be positive and finite, got {step}")));
    }
    if hi < lo {
        return Err(CliError::validation(format!(
            "{name}1 = {hi} is below {name}0 = {lo}"
        )));
    }
    let count = ((hi - lo) / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|i| lo + step * i as f64).collect())
}

fn grid_point(a: f64, b: f64, n_terms: usize) -> Result<SliceSweepRow, CliError> {
    let lengths = slice_lengths(&SliceParams { a, b, count: n_terms });
    let sigma = sigma_sequence(&lengths);
    let log_terms: Vec<f64> = sigma.iter().map(|&s| -0.5 * s).collect();
    let verdict = series_verdict_log(&log_terms, 0.1)?;
    let numeric_verdict = match verdict.status {
        SeriesStatus::Divergent => ParabolicVerdict::Parabolic,
        SeriesStatus::Convergent => ParabolicVerdict::NotParabolic,
        SeriesStatus::Indeterminate => ParabolicVerdict::Indeterminate,
    };
    let min_ab = a.min(b);
    let closed_form_verdict = if min_ab <= 2.0 {
        ParabolicVerdict::Parabolic
    } else {
        ParabolicVerdict::NotParabolic
    };
    let agree = numeric_verdict == closed_form_verdict
        || numeric_verdict == ParabolicVerdict::Indeterminate;
    Ok(SliceSweepRow {
        a,
        b,
        min_ab,
        exponent_estimate: verdict.exponent_estimate,
        numeric_verdict,
        closed_form_verdict,
        agree,
    })
}

/// Sweeps the (a, b) rectangle on a regular grid, comparing the numeric
/// series verdict at `n_terms` cuffs against the closed-form boundary
/// min(a, b) = 2. Rows are ordered with `a` outer and `b` inner, ascending.
pub fn sweep_slice(
    a0: f64,
    a1: f64,
    b0: f64,
    b1: f64,
    step: f64,
    n_terms: usize,
) -> Result<Vec<SliceSweepRow>, CliError> {
    let avals = axis(a0, a1, step, "a")?;
    let bvals = axis(b0, b1, step, "b")?;
    if n_terms < MIN_SERIES_TERMS {
        return Err(CliError::validation(format!(
            "n_terms must be at least {MIN_SERIES_TERMS}, got {n_terms}"
        )));
    }
    let pairs: Vec<(f64, f64)> =
        avals.iter().flat_map(|&a| bvals.iter().map(move |&b| (a, b))).collect();
    pairs.into_par_iter().map(|(a, b)| grid_point(a, b, n_terms)).collect()
}

/// Renders sweep rows as CSV with full-precision floats.
pub fn write_csv(rows: &[SliceSweepRow]) -> String {
    let mut out = String::with_capacity(rows.len() * 96 + 80);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            fmt_f64(r.a),
            fmt_f64(r.b),
            fmt_f64(r.min_ab),
            fmt_f64(r.exponent_estimate),
            r.numeric_verdict,
            r.closed_form_verdict,
            r.agree,
        ));
    }
    out
}

fn parse_verdict(s: &str, line: usize) -> Result<ParabolicVerdict, CliError> {
    match s {
        "PARABOLIC" => Ok(ParabolicVerdict::Parabolic),
        "NOT_PARABOLIC" => Ok(ParabolicVerdict::NotParabolic),
        "INDETERMINATE" => Ok(ParabolicVerdict::Indeterminate),
        other => Err(CliError::Csv(format!("line {line}: unknown verdict '{other}'"))),
    }
}

fn parse_float(s: &str, line: usize, field: &str) -> Result<f64, CliError> {
    s.parse::<f64>()
        .map_err(|_| CliError::Csv(format!("line {line}: field '{field}' is not a number: '{s}'")))
}

/// Parses CSV produced by [`write_csv`] back into rows.
pub fn parse_csv(text: &str) -> Result<Vec<SliceSweepRow>, CliError> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h == CSV_HEADER => {}
        Some(h) => {
            return Err(CliError::Csv(format!("unexpected header '{h}'")));
        }
        None => return Err(CliError::Csv("empty input".into())),
    }
    let mut rows = Vec::new();
    for (i, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let lineno = i + 2;
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 7 {
            return Err(CliError::Csv(format!(
                "line {lineno}: expected 7 fields, got {}",
                fields.len()
            )));
        }
        let agree = match fields[6] {
            "true" => true,
            "false" => false,
            other => {
                return Err(CliError::Csv(format!(
                    "line {lineno}: field 'agree' is not a boolean: '{other}'"
                )))
            }
        };
        rows.push(SliceSweepRow {
            a: parse_float(fields[0], lineno, "a")?,
            b: parse_float(fields[1], lineno, "b")?,
            min_ab: parse_float(fields[2], lineno, "min_ab")?,
            exponent_estimate: parse_float(fields[3], lineno, "exponent_estimate")?,
            numeric_verdict: parse_verdict(fields[4], lineno)?,
            closed_form_verdict: parse_verdict(fields[5], lineno)?,
            agree,
        });
    }
    Ok(rows)
}
