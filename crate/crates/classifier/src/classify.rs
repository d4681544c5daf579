//! Theorem dispatch: maps a surface description to kind and parabolicity
//! verdicts, recording which criterion decided and on what evidence.

use fenchel_nielsen::{CuffLengths, LengthSequences, SurfaceKind, SurfaceSpec, Twists};
use fenchel_nielsen::derive_sequences;
use shear_fan::{assemble_shears, fan_verdict_streaming, AccumulationOutcome, VerdictTolerances};

use crate::error::ClassifyError;
use crate::report::{ClassificationReport, Evidence, KindVerdict, LabeledSeries, ParabolicVerdict};
use crate::series::{series_verdict_log, SeriesStatus};

/// Upper bound on the fan depth used for cross-check evidence.
const FAN_EVIDENCE_CAP: usize = 1 << 21;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum TwistPattern {
    Zero,
    Half,
    MixedZeroHalf,
    General,
}

fn twist_pattern(twists: &Twists, n: usize) -> Result<(TwistPattern, Vec<f64>), ClassifyError> {
    match twists {
        Twists::Zero => Ok((TwistPattern::Zero, vec![0.0; n])),
        Twists::Half => Ok((TwistPattern::Half, vec![0.5; n])),
        Twists::Explicit(v) => {
            if v.len() < n {
                return Err(ClassifyError::domain(format!(
                    "insufficient data: {} twists for {} cuffs",
                    v.len(),
                    n
                )));
            }
            let abs: Vec<f64> = v[..n].iter().map(|t| t.abs()).collect();
            let pattern = if abs.iter().all(|&t| t == 0.0) {
                TwistPattern::Zero
            } else if abs.iter().all(|&t| t == 0.5) {
                TwistPattern::Half
            } else if abs.iter().all(|&t| t == 0.0 || t == 0.5) {
                TwistPattern::MixedZeroHalf
            } else {
                TwistPattern::General
            };
            Ok((pattern, abs))
        }
    }
}

fn labeled_series(
    label: &str,
    logs: &[f64],
    tolerance: f64,
) -> Result<LabeledSeries, ClassifyError> {
    Ok(LabeledSeries {
        label: label.to_string(),
        verdict: series_verdict_log(logs, tolerance)?,
    })
}

fn cuff_series(ell: &[f64], tolerance: f64) -> Result<LabeledSeries, ClassifyError> {
    let logs: Vec<f64> = ell.iter().map(|l| -0.5 * l).collect();
    labeled_series("sum exp(-l_n / 2)", &logs, tolerance)
}

fn sigma_series(sigma: &[f64], tolerance: f64) -> Result<LabeledSeries, ClassifyError> {
    let logs: Vec<f64> = sigma.iter().map(|s| -0.5 * s).collect();
    labeled_series("sum exp(-sigma_n / 2)", &logs, tolerance)
}

fn twisted_series(
    ell: &[f64],
    abs_twists: &[f64],
    tolerance: f64,
) -> Result<LabeledSeries, ClassifyError> {
    let logs: Vec<f64> =
        ell.iter().zip(abs_twists).map(|(l, t)| -0.5 * (1.0 - t) * l).collect();
    labeled_series("sum exp(-(1 - |t_n|) l_n / 2)", &logs, tolerance)
}

/// Both verdicts of an if-and-only-if series criterion.
fn iff_verdicts(status: SeriesStatus) -> (KindVerdict, ParabolicVerdict) {
    match status {
        SeriesStatus::Divergent => (KindVerdict::FirstKind, ParabolicVerdict::Parabolic),
        SeriesStatus::Convergent => (KindVerdict::SecondKind, ParabolicVerdict::NotParabolic),
        SeriesStatus::Indeterminate => (KindVerdict::Indeterminate, ParabolicVerdict::Indeterminate),
    }
}

fn indeterminate_caveat(n: usize) -> String {
    format!("series analysis is indeterminate at {n} terms; raise n_terms or widen the tolerance")
}

/// Streams the geodesic fan for a half-twist sequence and records its
/// accumulation verdict as evidence, with a caveat when it contradicts the
/// series or cannot be computed.
fn fan_cross_check(
    seq: &LengthSequences,
    n_cuffs: usize,
    series_status: SeriesStatus,
    evidence: &mut Evidence,
    caveats: &mut Vec<String>,
) {
    let n_fan = (2 * n_cuffs - 1).min(FAN_EVIDENCE_CAP);
    let result = assemble_shears(seq, 0.0)
        .and_then(|sh| fan_verdict_streaming(&sh, n_fan, &VerdictTolerances::default()));
    match result {
        Ok(v) => {
            let clash = matches!(
                (series_status, v.outcome),
                (SeriesStatus::Divergent, AccumulationOutcome::GeodesicLimit)
                    | (SeriesStatus::Convergent, AccumulationOutcome::SinglePoint)
            );
            if clash {
                caveats.push(format!(
                    "fan accumulation verdict {} is inconsistent with the series verdict",
                    v.outcome
                ));
            }
            evidence.fan = Some(v);
        }
        Err(e) => caveats.push(format!("fan cross-check unavailable: {e}")),
    }
}

/// Evaluates the two unconditional divergence sums. Either one diverging
/// forces a parabolic verdict; nothing else can be concluded on this route.
fn sufficient_sums_route(
    seq: &LengthSequences,
    abs_twists: &[f64],
    tolerance: f64,
    theorem: &str,
    mut caveats: Vec<String>,
) -> Result<ClassificationReport, ClassifyError> {
    let s_plain = cuff_series(&seq.ell, tolerance)?;
    let s_twisted = twisted_series(&seq.ell, abs_twists, tolerance)?;
    let diverges = s_plain.verdict.status == SeriesStatus::Divergent
        || s_twisted.verdict.status == SeriesStatus::Divergent;
    let (kind, parabolic) = if diverges {
        (KindVerdict::FirstKind, ParabolicVerdict::Parabolic)
    } else {
        caveats.push(
            "neither sufficient sum diverges at this depth; the criterion cannot rule either way"
                .to_string(),
        );
        (KindVerdict::Indeterminate, ParabolicVerdict::Indeterminate)
    };
    Ok(ClassificationReport {
        kind_verdict: kind,
        parabolic_verdict: parabolic,
        theorem_used: theorem.to_string(),
        evidence: Evidence { series: vec![s_plain, s_twisted], fan: None },
        caveats,
    })
}

/// Classifies a flute surface from its Fenchel-Nielsen description.
///
/// Dispatches on the twist pattern: zero twists use the cuff-length series
/// criterion, half twists with nondecreasing lengths use the alternating-sum
/// criterion cross-checked by the geodesic fan, and anything else falls back
/// to the unconditional sufficient sums. Slice-form lengths additionally get
/// the closed-form phase verdict.
pub fn classify_flute(
    spec: &SurfaceSpec,
    n_terms: usize,
    tolerance: f64,
) -> Result<ClassificationReport, ClassifyError> {
    if spec.kind != SurfaceKind::Flute {
        return Err(ClassifyError::domain("classify_flute requires a flute description"));
    }
    let declared = spec.cuff_lengths.declared_count();
    let n_eff = n_terms.min(declared);
    let seq = derive_sequences(spec, n_eff)?;
    let mut caveats = Vec::new();
    if n_eff < n_terms {
        caveats.push(format!(
            "description provides {declared} cuffs; analysis used {n_eff} of the requested {n_terms}"
        ));
    }
    let (pattern, abs_twists) = twist_pattern(&spec.twists, n_eff)?;
    let nondecreasing = seq.ell.windows(2).all(|w| w[1] >= w[0]);

    match pattern {
        TwistPattern::Zero => {
            let s = cuff_series(&seq.ell, tolerance)?;
            let (kind, parabolic) = iff_verdicts(s.verdict.status);
            if s.verdict.status == SeriesStatus::Indeterminate {
                caveats.push(indeterminate_caveat(n_eff));
            }
            Ok(ClassificationReport {
                kind_verdict: kind,
                parabolic_verdict: parabolic,
                theorem_used: "Thm 2.2".to_string(),
                evidence: Evidence { series: vec![s], fan: None },
                caveats,
            })
        }
        TwistPattern::Half if nondecreasing => {
            let s = sigma_series(&seq.sigma, tolerance)?;
            let mut evidence = Evidence::default();
            fan_cross_check(&seq, n_eff, s.verdict.status, &mut evidence, &mut caveats);
            if let CuffLengths::Slice(p) = &spec.cuff_lengths {
                // Closed form decides; the numeric series and fan remain as
                // corroborating evidence.
                let parabolic_closed = p.a.min(p.b) <= 2.0;
                let (kind, parabolic) = if parabolic_closed {
                    (KindVerdict::FirstKind, ParabolicVerdict::Parabolic)
                } else {
                    (KindVerdict::SecondKind, ParabolicVerdict::NotParabolic)
                };
                match (s.verdict.status, parabolic_closed) {
                    (SeriesStatus::Indeterminate, _) => caveats.push(
                        "numeric series is indeterminate; the closed form decides".to_string(),
                    ),
                    (SeriesStatus::Divergent, false) | (SeriesStatus::Convergent, true) => {
                        caveats.push(format!(
                            "numeric series verdict {} disagrees with the closed form; closed form reported",
                            s.verdict.status
                        ));
                    }
                    _ => {}
                }
                evidence.series.push(s);
                Ok(ClassificationReport {
                    kind_verdict: kind,
                    parabolic_verdict: parabolic,
                    theorem_used: "Thm 5.1; Cor 1.4".to_string(),
                    evidence,
                    caveats,
                })
            } else {
                let (kind, parabolic) = iff_verdicts(s.verdict.status);
                if s.verdict.status == SeriesStatus::Indeterminate {
                    caveats.push(indeterminate_caveat(n_eff));
                }
                evidence.series.push(s);
                Ok(ClassificationReport {
                    kind_verdict: kind,
                    parabolic_verdict: parabolic,
                    theorem_used: "Thm 5.1".to_string(),
                    evidence,
                    caveats,
                })
            }
        }
        TwistPattern::Half => {
            caveats.push(
                "cuff lengths are not nondecreasing; the half-twist series criterion does not apply, so only the sufficient divergence test is used"
                    .to_string(),
            );
            sufficient_sums_route(&seq, &abs_twists, tolerance, "Thm 2.1 sufficient only", caveats)
        }
        TwistPattern::MixedZeroHalf => {
            caveats.push(
                "mixed twists in {0, 1/2} have no series criterion; only the sufficient divergence test is used"
                    .to_string(),
            );
            sufficient_sums_route(
                &seq,
                &abs_twists,
                tolerance,
                "Thm 2.1 sufficient only; Thm 1.1",
                caveats,
            )
        }
        TwistPattern::General => sufficient_sums_route(
            &seq,
            &abs_twists,
            tolerance,
            "Thm 2.1 sufficient only",
            caveats,
        ),
    }
}

/// Classifies an end surface (one handle per complementary piece) from its
/// Fenchel-Nielsen description.
///
/// Zero twists use the cuff-length series with the orthogeodesic series as
/// corroboration; half twists with nondecreasing lengths use the
/// alternating-sum criterion. Other twist patterns are outside the available
/// criteria and come back indeterminate.
pub fn classify_end_surface(
    spec: &SurfaceSpec,
    n_terms: usize,
    tolerance: f64,
) -> Result<ClassificationReport, ClassifyError> {
    if spec.kind != SurfaceKind::EndSurface {
        return Err(ClassifyError::domain(
            "classify_end_surface requires an end-surface description",
        ));
    }
    let declared = spec.cuff_lengths.declared_count();
    let n_eff = n_terms.min(declared);
    let seq = derive_sequences(spec, n_eff)?;
    let mut caveats = Vec::new();
    if n_eff < n_terms {
        caveats.push(format!(
            "description provides {declared} cuffs; analysis used {n_eff} of the requested {n_terms}"
        ));
    }
    let (pattern, _) = twist_pattern(&spec.twists, n_eff)?;
    let nondecreasing = seq.ell.windows(2).all(|w| w[1] >= w[0]);

    match pattern {
        TwistPattern::Zero => {
            let s = cuff_series(&seq.ell, tolerance)?;
            let (kind, parabolic) = iff_verdicts(s.verdict.status);
            if s.verdict.status == SeriesStatus::Indeterminate {
                caveats.push(indeterminate_caveat(n_eff));
            }
            let mut series = vec![s];
            // The paths along consecutive orthogeodesics have total length
            // comparable to the cuff series, so their sum corroborates it.
            let eta_logs: Vec<f64> = seq.eta.iter().map(|e| e.ln()).collect();
            match labeled_series("sum eta_n", &eta_logs, tolerance) {
                Ok(c) => {
                    let clash = matches!(
                        (series[0].verdict.status, c.verdict.status),
                        (SeriesStatus::Divergent, SeriesStatus::Convergent)
                            | (SeriesStatus::Convergent, SeriesStatus::Divergent)
                    );
                    if clash {
                        caveats.push(format!(
                            "orthogeodesic series verdict {} disagrees with the cuff series",
                            c.verdict.status
                        ));
                    }
                    series.push(c);
                }
                Err(e) => caveats.push(format!("orthogeodesic cross-check unavailable: {e}")),
            }
            Ok(ClassificationReport {
                kind_verdict: kind,
                parabolic_verdict: parabolic,
                theorem_used: "Thm 5.5".to_string(),
                evidence: Evidence { series, fan: None },
                caveats,
            })
        }
        TwistPattern::Half if nondecreasing => {
            let s = sigma_series(&seq.sigma, tolerance)?;
            let (kind, parabolic) = iff_verdicts(s.verdict.status);
            if s.verdict.status == SeriesStatus::Indeterminate {
                caveats.push(indeterminate_caveat(n_eff));
            }
            let mut evidence = Evidence::default();
            fan_cross_check(&seq, n_eff, s.verdict.status, &mut evidence, &mut caveats);
            evidence.series.push(s);
            Ok(ClassificationReport {
                kind_verdict: kind,
                parabolic_verdict: parabolic,
                theorem_used: "Thm 5.4".to_string(),
                evidence,
                caveats,
            })
        }
        TwistPattern::Half => {
            let s = sigma_series(&seq.sigma, tolerance)?;
            caveats.push(
                "cuff lengths are not nondecreasing; the end-surface half-twist criterion does not apply"
                    .to_string(),
            );
            Ok(ClassificationReport {
                kind_verdict: KindVerdict::Indeterminate,
                parabolic_verdict: ParabolicVerdict::Indeterminate,
                theorem_used: "Thm 5.4".to_string(),
                evidence: Evidence { series: vec![s], fan: None },
                caveats,
            })
        }
        TwistPattern::MixedZeroHalf | TwistPattern::General => {
            caveats.push(
                "end-surface criteria cover all-zero or all-half twists only".to_string(),
            );
            Ok(ClassificationReport {
                kind_verdict: KindVerdict::Indeterminate,
                parabolic_verdict: ParabolicVerdict::Indeterminate,
                theorem_used: "none".to_string(),
                evidence: Evidence::default(),
                caveats,
            })
        }
    }
}

/// Closed-form phase verdict for the two-parameter slice of half-twist
/// flutes: parabolic exactly when `min(a, b) <= 2`.
pub fn classify_slice(a: f64, b: f64) -> Result<ClassificationReport, ClassifyError> {
    for (name, v) in [("a", a), ("b", b)] {
        if !(v.is_finite() && v > 0.0) {
            return Err(ClassifyError::domain(format!(
                "slice parameter {name} must be positive and finite, got {v}"
            )));
        }
    }
    let (kind, parabolic) = if a.min(b) <= 2.0 {
        (KindVerdict::FirstKind, ParabolicVerdict::Parabolic)
    } else {
        (KindVerdict::SecondKind, ParabolicVerdict::NotParabolic)
    };
    Ok(ClassificationReport {
        kind_verdict: kind,
        parabolic_verdict: parabolic,
        theorem_used: "Cor 1.4".to_string(),
        evidence: Evidence::default(),
        caveats: Vec::new(),
    })
}

/// Dispatches to [`classify_flute`] or [`classify_end_surface`] on the
/// description's kind.
pub fn classify(
    spec: &SurfaceSpec,
    n_terms: usize,
    tolerance: f64,
) -> Result<ClassificationReport, ClassifyError> {
    match spec.kind {
        SurfaceKind::Flute => classify_flute(spec, n_terms, tolerance),
        SurfaceKind::EndSurface => classify_end_surface(spec, n_terms, tolerance),
    }
}
