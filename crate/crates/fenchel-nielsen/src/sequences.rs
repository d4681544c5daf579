use crate::error::FnError;
use crate::spec::{CuffLengths, SliceParams, SurfaceKind, SurfaceSpec};
use hyperbolic_core::{lambert_side, log_add_exp, log_cosh, log_sinh};
use std::f64::consts::{LN_2, SQRT_2};

/// Cuff lengths, orthogeodesic lengths, and alternating partial sums derived
/// from a surface description.
#[derive(Clone, Debug, PartialEq)]
pub struct LengthSequences {
    /// Cuff lengths, one per cuff.
    pub ell: Vec<f64>,
    /// Orthogeodesic lengths between consecutive cuffs; `eta[i]` joins
    /// `ell[i]` to `ell[i+1]`, so this is one shorter than `ell`.
    pub eta: Vec<f64>,
    /// Alternating sums `sigma[0] = ell[0]`, `sigma[i] = ell[i] - sigma[i-1]`.
    pub sigma: Vec<f64>,
}

/// Cuff lengths of the interleaved logarithmic family: the odd positions are
/// `a ln(k+1) + b ln(k)` and the even positions `(a+b) ln(k+1)` for
/// `k = 1, 2, ...`, truncated to `count` entries.
///
/// The family is strictly increasing for positive `a, b`, and its alternating
/// sums collapse exactly to `a ln(k+1)` and `b ln(k+1)`.
pub fn slice_lengths(p: &SliceParams) -> Vec<f64> {
    let mut out = Vec::with_capacity(p.count);
    let mut k = 1usize;
    while out.len() < p.count {
        let lk = (k as f64).ln();
        let lk1 = ((k + 1) as f64).ln();
        out.push(p.a * lk1 + p.b * lk);
        if out.len() < p.count {
            out.push((p.a + p.b) * lk1);
        }
        k += 1;
    }
    out
}

/// Alternating partial sums `sigma[0] = ell[0]`,
/// `sigma[i] = ell[i] - sigma[i-1]`.
///
/// When `ell` is nondecreasing every `sigma[i]` stays within `[0, ell[i]]`.
pub fn sigma_sequence(ell: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(ell.len());
    let mut prev = 0.0;
    for &l in ell {
        let s = l - prev;
        out.push(s);
        prev = s;
    }
    out
}

/// Distance between consecutive cuff geodesics of a flute piece bounded by
/// cuffs of lengths `l1` and `l2`: the sum of the two Lambert side lengths
/// `arcsinh(1/sinh(l/2))`.
///
/// Symmetric and strictly decreasing in each argument.
pub fn eta_pentagon(l1: f64, l2: f64) -> Result<f64, FnError> {
    for l in [l1, l2] {
        if !l.is_finite() || l <= 0.0 {
            return Err(FnError::domain(format!(
                "eta_pentagon requires positive finite cuff lengths, got {l}"
            )));
        }
    }
    Ok(lambert_side(0.5 * l1)? + lambert_side(0.5 * l2)?)
}

/// Distance between consecutive cuff geodesics of a handle-bearing piece
/// whose third boundary curve has length `beta`: the right-angled hexagon
/// side relation
/// `cosh(eta) = (cosh(beta/2) + cosh(l1/2) cosh(l2/2)) / (sinh(l1/2) sinh(l2/2))`
/// solved for `eta`.
///
/// Evaluated as `eta = log1p(u + sqrt(u (2 + u)))` where
/// `u = (cosh(beta/2) + cosh((l1 - l2)/2)) / (sinh(l1/2) sinh(l2/2))`
/// is formed in the log domain, so the result keeps full relative precision
/// even when `eta` underflows far below `1` or the sides overflow `cosh`.
pub fn eta_hexagon(l1: f64, l2: f64, beta: f64) -> Result<f64, FnError> {
    for (name, v) in [("l1", l1), ("l2", l2), ("beta", beta)] {
        if !v.is_finite() || v <= 0.0 {
            return Err(FnError::domain(format!(
                "eta_hexagon requires positive finite sides, got {name} = {v}"
            )));
        }
    }
    let ln_u = log_add_exp(log_cosh(0.5 * beta), log_cosh(0.5 * (l1 - l2)))
        - log_sinh(0.5 * l1)
        - log_sinh(0.5 * l2);
    if !ln_u.is_finite() {
        return Err(FnError::InconsistentHexagon(format!(
            "no common perpendicular for sides ({l1}, {l2}, {beta})"
        )));
    }
    if ln_u <= -40.0 {
        Ok(SQRT_2 * (0.5 * ln_u).exp())
    } else if ln_u >= 40.0 {
        Ok(LN_2 + ln_u)
    } else {
        let u = ln_u.exp();
        Ok((u + (u * (2.0 + u)).sqrt()).ln_1p())
    }
}

/// Expands a surface description into its first `n_terms` cuff lengths, the
/// orthogeodesic lengths between consecutive cuffs, and the alternating sums.
///
/// Errors with "insufficient data" when the description declares fewer than
/// `n_terms` cuffs.
pub fn derive_sequences(spec: &SurfaceSpec, n_terms: usize) -> Result<LengthSequences, FnError> {
    spec.validate()?;
    if n_terms < 2 {
        return Err(FnError::domain("derive_sequences requires at least two cuffs"));
    }
    let declared = spec.cuff_lengths.declared_count();
    if n_terms > declared {
        return Err(FnError::InsufficientData(format!(
            "requested {n_terms} cuffs but the description provides {declared}"
        )));
    }
    let ell: Vec<f64> = match &spec.cuff_lengths {
        CuffLengths::Slice(p) => slice_lengths(&SliceParams { count: n_terms, ..*p }),
        CuffLengths::LogGrowth { coeff, .. } => {
            (1..=n_terms).map(|k| coeff * ((k + 1) as f64).ln()).collect()
        }
        CuffLengths::Constant { value, .. } => vec![*value; n_terms],
        CuffLengths::Explicit(v) => v[..n_terms].to_vec(),
    };
    let mut eta = Vec::with_capacity(n_terms - 1);
    for w in ell.windows(2) {
        let e = match spec.kind {
            SurfaceKind::Flute => eta_pentagon(w[0], w[1])?,
            SurfaceKind::EndSurface => {
                eta_hexagon(w[0], w[1], spec.beta_length.expect("validated"))?
            }
        };
        eta.push(e);
    }
    let sigma = sigma_sequence(&ell);
    Ok(LengthSequences { ell, eta, sigma })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec::Twists;

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * a.abs().max(b.abs()).max(1.0)
    }

    #[test]
    fn slice_frozen_prefix() {
        let got = slice_lengths(&SliceParams { a: 4.0, b: 1.0, count: 6 });
        let want = [
            2.7725887222397812,
            3.4657359027997265,
            5.0875963352323841,
            5.4930614433405485,
            6.6437897331476722,
            6.9314718055994531,
        ];
        for (g, w) in got.iter().zip(want) {
            assert!(close(*g, w, 5e-15), "{g} vs {w}");
        }
    }

    #[test]
    fn slice_is_strictly_increasing() {
        for (a, b) in [(4.0, 1.0), (0.5, 6.2), (3.0, 3.0), (0.1, 0.1)] {
            let l = slice_lengths(&SliceParams { a, b, count: 500 });
            for w in l.windows(2) {
                assert!(w[1] > w[0], "not increasing at {w:?} for ({a}, {b})");
            }
        }
    }

    #[test]
    fn slice_sigma_collapses_to_pure_logs() {
        let (a, b) = (4.0, 1.0);
        let l = slice_lengths(&SliceParams { a, b, count: 400 });
        let s = sigma_sequence(&l);
        for (i, &si) in s.iter().enumerate() {
            let k = (i / 2 + 2) as f64;
            let want = if i % 2 == 0 { a * k.ln() } else { b * k.ln() };
            assert!(close(si, want, 1e-12), "sigma[{i}] = {si} vs {want}");
        }
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_sequence(&[1.0, 2.0, 3.0, 4.0]), vec![1.0, 1.0, 2.0, 2.0]);
        assert_eq!(sigma_sequence(&[5.0, 5.0, 5.0, 5.0]), vec![5.0, 0.0, 5.0, 0.0]);
    }

    #[test]
    fn pentagon_frozen_values() {
        assert!(close(eta_pentagon(2.0, 2.0).unwrap(), 1.5438736658106095, 5e-15));
        assert!(close(eta_pentagon(3.0, 4.5).unwrap(), 0.66548001700999776, 5e-15));
        assert!(close(eta_pentagon(4.0, 4.0).unwrap(), 0.54468293782366311, 5e-15));
        assert!(close(eta_pentagon(0.5, 12.0).unwrap(), 2.0895884838315657, 5e-15));
    }

    #[test]
    fn pentagon_symmetric_and_decreasing() {
        assert_eq!(eta_pentagon(3.0, 4.5).unwrap(), eta_pentagon(4.5, 3.0).unwrap());
        let grid = [0.5, 1.0, 2.0, 4.0, 8.0];
        for &l2 in &grid {
            for w in grid.windows(2) {
                let hi = eta_pentagon(w[0], l2).unwrap();
                let lo = eta_pentagon(w[1], l2).unwrap();
                assert!(lo < hi);
            }
        }
    }

    #[test]
    fn hexagon_frozen_values() {
        assert!(close(eta_hexagon(4.0, 5.0, 1.0).unwrap(), 0.44958378516003246, 5e-15));
        assert!(close(eta_hexagon(0.1, 0.1, 100.0).unwrap(), 55.990631283208072, 5e-14));
        assert!(close(eta_hexagon(42.0, 42.0, 1.0).unwrap(), 3.1283008623907210e-9, 5e-14));
    }

    #[test]
    fn hexagon_symmetric_in_cuffs() {
        let x = eta_hexagon(2.0, 7.0, 1.5).unwrap();
        let y = eta_hexagon(7.0, 2.0, 1.5).unwrap();
        assert!(close(x, y, 1e-15));
    }

    #[test]
    fn hexagon_approaches_pentagon_for_small_beta() {
        for &l1 in &[0.5, 1.0, 2.0, 5.0, 8.0] {
            for &l2 in &[0.5, 1.0, 2.0, 5.0, 8.0] {
                let hex = eta_hexagon(l1, l2, 1e-6).unwrap();
                let pent = eta_pentagon(l1, l2).unwrap();
                assert!((hex - pent).abs() <= 1e-9, "({l1}, {l2}): {hex} vs {pent}");
            }
        }
    }

    #[test]
    fn hexagon_matches_direct_form_in_medium_range() {
        for &l in &[30.0_f64, 36.0, 40.0, 42.0, 44.0, 50.0, 60.0] {
            let direct_u = (0.5f64.cosh() + 1.0) / (0.5 * l).sinh().powi(2);
            let reference = (2.0 * direct_u).sqrt() * (1.0 - direct_u / 12.0);
            let got = eta_hexagon(l, l, 1.0).unwrap();
            assert!(close(got, reference, 1e-12), "l = {l}: {got} vs {reference}");
        }
    }

    #[test]
    fn derive_sequences_shapes_and_errors() {
        let spec = SurfaceSpec {
            kind: SurfaceKind::Flute,
            cuff_lengths: CuffLengths::Constant { value: 2.0, count: 12 },
            twists: Twists::Zero,
            beta_length: None,
            gamma_length: None,
        };
        let seq = derive_sequences(&spec, 12).unwrap();
        assert_eq!(seq.ell.len(), 12);
        assert_eq!(seq.eta.len(), 11);
        assert_eq!(seq.sigma.len(), 12);
        let e0 = eta_pentagon(2.0, 2.0).unwrap();
        assert!(seq.eta.iter().all(|&e| e == e0));

        let err = derive_sequences(&spec, 13).unwrap_err().to_string();
        assert!(err.contains("insufficient data"), "{err}");
    }

    #[test]
    fn derive_sequences_end_surface_uses_hexagons() {
        let spec = SurfaceSpec {
            kind: SurfaceKind::EndSurface,
            cuff_lengths: CuffLengths::Explicit(vec![4.0, 5.0]),
            twists: Twists::Half,
            beta_length: Some(1.0),
            gamma_length: Some(1.0),
        };
        let seq = derive_sequences(&spec, 2).unwrap();
        assert!(close(seq.eta[0], 0.44958378516003246, 5e-15));
    }
}
