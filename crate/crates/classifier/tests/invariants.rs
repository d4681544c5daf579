use classifier::{
    classify_end_surface, classify_flute, classify_slice, series_verdict_log, KindVerdict,
    ParabolicVerdict, SeriesStatus,
};
use fenchel_nielsen::{
    sigma_sequence, slice_lengths, CuffLengths, SliceParams, SurfaceKind, SurfaceSpec, Twists,
};
use proptest::prelude::*;

fn flute(lengths: CuffLengths, twists: Twists) -> SurfaceSpec {
    SurfaceSpec {
        kind: SurfaceKind::Flute,
        cuff_lengths: lengths,
        twists,
        beta_length: None,
        gamma_length: None,
    }
}

fn slice_sigma_exponent(a: f64, b: f64, n: usize) -> f64 {
    let ell = slice_lengths(&SliceParams { a, b, count: n });
    let logs: Vec<f64> = sigma_sequence(&ell).iter().map(|s| -0.5 * s).collect();
    series_verdict_log(&logs, 0.1).unwrap().exponent_estimate
}

#[test]
fn sigma_exponent_tracks_min_over_two() {
    // The alternating sums of slice lengths collapse to a ln(k+1), b ln(k+1),
    // so the series behaves like sum k^(-min(a,b)/2). The frozen values pin
    // the block estimator's output at this depth.
    let cases = [
        (4.0, 1.0, 0.499931),
        (1.0, 1.0, 0.499930),
        (3.0, 3.0, 1.499780),
        (0.5, 6.2, 0.249965),
    ];
    for (a, b, frozen) in cases {
        let p = slice_sigma_exponent(a, b, 100_000);
        assert!((p - a.min(b) / 2.0).abs() <= 0.15, "({a},{b}): exponent {p}");
        assert!((p - frozen).abs() < 1e-3, "({a},{b}): exponent {p} vs frozen {frozen}");
    }
}

#[test]
fn numeric_slice_verdicts_agree_with_closed_form_off_the_band() {
    let grid = [0.5, 1.0, 1.5, 2.5, 3.0, 4.0, 5.75];
    for &a in &grid {
        for &b in &grid {
            let closed = classify_slice(a, b).unwrap();
            // Explicit lengths hide the slice tag, forcing the numeric path.
            let ell = slice_lengths(&SliceParams { a, b, count: 20_000 });
            let spec = flute(CuffLengths::Explicit(ell), Twists::Half);
            let numeric = classify_flute(&spec, 20_000, 0.1).unwrap();
            assert_eq!(numeric.theorem_used, "Thm 5.1");
            assert_eq!(
                numeric.parabolic_verdict, closed.parabolic_verdict,
                "({a},{b}): numeric disagrees with closed form"
            );
            assert_eq!(numeric.kind_verdict, closed.kind_verdict, "({a},{b})");
        }
    }
}

#[test]
fn deeper_analysis_never_flips_a_decided_verdict() {
    let grid = [0.6, 1.2, 1.8, 2.6, 3.4, 4.6];
    for &a in &grid {
        for &b in &grid {
            let coarse = {
                let ell = slice_lengths(&SliceParams { a, b, count: 10_000 });
                let logs: Vec<f64> = sigma_sequence(&ell).iter().map(|s| -0.5 * s).collect();
                series_verdict_log(&logs, 0.1).unwrap().status
            };
            let fine = {
                let ell = slice_lengths(&SliceParams { a, b, count: 100_000 });
                let logs: Vec<f64> = sigma_sequence(&ell).iter().map(|s| -0.5 * s).collect();
                series_verdict_log(&logs, 0.1).unwrap().status
            };
            let flipped = matches!(
                (coarse, fine),
                (SeriesStatus::Divergent, SeriesStatus::Convergent)
                    | (SeriesStatus::Convergent, SeriesStatus::Divergent)
            );
            assert!(!flipped, "({a},{b}): {coarse:?} at 1e4 became {fine:?} at 1e5");
        }
    }
}

fn length_family() -> impl Strategy<Value = CuffLengths> {
    prop_oneof![
        ((0.3..6.0f64), (0.3..6.0f64))
            .prop_map(|(a, b)| CuffLengths::Slice(SliceParams { a, b, count: 400 })),
        (0.5..6.0f64).prop_map(|coeff| CuffLengths::LogGrowth { coeff, count: 400 }),
        (0.5..8.0f64).prop_map(|value| CuffLengths::Constant { value, count: 400 }),
        prop::collection::vec(0.01..0.2f64, 400).prop_map(|steps| {
            let mut l = 1.0;
            CuffLengths::Explicit(steps.into_iter().map(|d| {
                l += d;
                l
            }).collect())
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // For twists in {0, 1/2} the two verdicts express one dichotomy, so a
    // decided report must put them on the same side.
    #[test]
    fn kind_and_parabolicity_stay_coherent(
        lengths in length_family(),
        half in any::<bool>(),
    ) {
        let twists = if half { Twists::Half } else { Twists::Zero };
        let report = classify_flute(&flute(lengths.clone(), twists.clone()), 400, 0.1).unwrap();
        let decided = report.kind_verdict != KindVerdict::Indeterminate
            && report.parabolic_verdict != ParabolicVerdict::Indeterminate;
        if decided {
            prop_assert_eq!(
                report.kind_verdict == KindVerdict::FirstKind,
                report.parabolic_verdict == ParabolicVerdict::Parabolic
            );
        }

        let end = SurfaceSpec {
            kind: SurfaceKind::EndSurface,
            cuff_lengths: lengths,
            twists,
            beta_length: Some(1.3),
            gamma_length: Some(0.8),
        };
        let report = classify_end_surface(&end, 400, 0.1).unwrap();
        let decided = report.kind_verdict != KindVerdict::Indeterminate
            && report.parabolic_verdict != ParabolicVerdict::Indeterminate;
        if decided {
            prop_assert_eq!(
                report.kind_verdict == KindVerdict::FirstKind,
                report.parabolic_verdict == ParabolicVerdict::Parabolic
            );
        }
    }
}
