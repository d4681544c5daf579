use crate::error::FnError;

/// Which infinite-type symmetric surface family a description targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SurfaceKind {
    /// A planar surface built from a sequence of cuffs marching down one end.
    Flute,
    /// A surface whose complementary pieces each carry a handle, so every
    /// cuff is separated from the next by a fixed pair of boundary data.
    EndSurface,
}

/// Parameters of the interleaved logarithmic length family
/// `a ln(k+1) + b ln(k)`, `(a+b) ln(k+1)` for `k = 1, 2, ...`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SliceParams {
    pub a: f64,
    pub b: f64,
    /// Number of cuffs the family is declared to provide.
    pub count: usize,
}

/// Cuff length data: a closed-form generator or an explicit list.
#[derive(Clone, Debug, PartialEq)]
pub enum CuffLengths {
    /// The two-parameter interleaved logarithmic family.
    Slice(SliceParams),
    /// `coeff * ln(n+1)` for `n = 1, 2, ...`.
    LogGrowth { coeff: f64, count: usize },
    /// One fixed length repeated.
    Constant { value: f64, count: usize },
    /// Explicit positive lengths.
    Explicit(Vec<f64>),
}

impl CuffLengths {
    /// How many cuffs this description can supply.
    pub fn declared_count(&self) -> usize {
        match self {
            CuffLengths::Slice(p) => p.count,
            CuffLengths::LogGrowth { count, .. } => *count,
            CuffLengths::Constant { count, .. } => *count,
            CuffLengths::Explicit(v) => v.len(),
        }
    }
}

/// Twist data at the cuffs, as fractions of cuff length in `[-1/2, 1/2]`.
#[derive(Clone, Debug, PartialEq)]
pub enum Twists {
    /// Every twist is `0`.
    Zero,
    /// Every twist is `1/2`.
    Half,
    /// Explicit per-cuff twists.
    Explicit(Vec<f64>),
}

/// A symmetric surface described by Fenchel-Nielsen data down one end.
#[derive(Clone, Debug, PartialEq)]
pub struct SurfaceSpec {
    pub kind: SurfaceKind,
    pub cuff_lengths: CuffLengths,
    pub twists: Twists,
    /// Boundary length of each handle-bearing piece (end surfaces only).
    pub beta_length: Option<f64>,
    /// Core curve length of each handle (end surfaces only).
    pub gamma_length: Option<f64>,
}

const PIECE_RANGE: (f64, f64) = (1e-6, 1e6);

fn positive(name: &str, v: f64) -> Result<(), FnError> {
    if !v.is_finite() || v <= 0.0 {
        return Err(FnError::validation(format!("{name} must be positive and finite, got {v}")));
    }
    Ok(())
}

impl SurfaceSpec {
    /// Checks internal consistency: positive lengths, twists within range,
    /// and handle data present exactly when the kind calls for it.
    pub fn validate(&self) -> Result<(), FnError> {
        match &self.cuff_lengths {
            CuffLengths::Slice(p) => {
                positive("slice parameter a", p.a)?;
                positive("slice parameter b", p.b)?;
                if p.count < 2 {
                    return Err(FnError::validation("slice count must be at least 2"));
                }
            }
            CuffLengths::LogGrowth { coeff, count } => {
                positive("log growth coefficient", *coeff)?;
                if *count < 2 {
                    return Err(FnError::validation("log growth count must be at least 2"));
                }
            }
            CuffLengths::Constant { value, count } => {
                positive("constant cuff length", *value)?;
                if *count < 2 {
                    return Err(FnError::validation("constant count must be at least 2"));
                }
            }
            CuffLengths::Explicit(v) => {
                if v.len() < 2 {
                    return Err(FnError::validation("explicit cuff lengths need at least 2 entries"));
                }
                for (i, &l) in v.iter().enumerate() {
                    if !l.is_finite() || l <= 0.0 {
                        return Err(FnError::validation(format!(
                            "cuff_lengths[{i}] must be positive and finite, got {l}"
                        )));
                    }
                }
            }
        }
        if let Twists::Explicit(v) = &self.twists {
            for (i, &t) in v.iter().enumerate() {
                if !t.is_finite() || !(-0.5..=0.5).contains(&t) {
                    return Err(FnError::validation(format!(
                        "twist out of range: twists[{i}] = {t} lies outside [-1/2, 1/2]"
                    )));
                }
            }
        }
        match self.kind {
            SurfaceKind::Flute => {
                if self.beta_length.is_some() || self.gamma_length.is_some() {
                    return Err(FnError::validation(
                        "beta_length and gamma_length apply only to end surfaces",
                    ));
                }
            }
            SurfaceKind::EndSurface => {
                let beta = self.beta_length.ok_or_else(|| {
                    FnError::validation("end surfaces require beta_length")
                })?;
                let gamma = self.gamma_length.ok_or_else(|| {
                    FnError::validation("end surfaces require gamma_length")
                })?;
                for (name, v) in [("beta_length", beta), ("gamma_length", gamma)] {
                    positive(name, v)?;
                    if !(PIECE_RANGE.0..=PIECE_RANGE.1).contains(&v) {
                        return Err(FnError::validation(format!(
                            "{name} = {v} outside supported range [{}, {}]",
                            PIECE_RANGE.0, PIECE_RANGE.1
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flute(lengths: CuffLengths, twists: Twists) -> SurfaceSpec {
        SurfaceSpec { kind: SurfaceKind::Flute, cuff_lengths: lengths, twists, beta_length: None, gamma_length: None }
    }

    #[test]
    fn valid_flute_passes() {
        let s = flute(CuffLengths::Constant { value: 2.0, count: 10 }, Twists::Zero);
        assert!(s.validate().is_ok());
    }

    #[test]
    fn twist_range_enforced() {
        let s = flute(
            CuffLengths::Constant { value: 2.0, count: 4 },
            Twists::Explicit(vec![0.0, 0.5, -0.5, 0.7]),
        );
        let err = s.validate().unwrap_err().to_string();
        assert!(err.contains("twist out of range"), "{err}");
    }

    #[test]
    fn handle_data_only_for_end_surfaces() {
        let mut s = flute(CuffLengths::Constant { value: 2.0, count: 4 }, Twists::Zero);
        s.beta_length = Some(1.0);
        assert!(s.validate().is_err());

        let e = SurfaceSpec {
            kind: SurfaceKind::EndSurface,
            cuff_lengths: CuffLengths::Constant { value: 2.0, count: 4 },
            twists: Twists::Zero,
            beta_length: Some(1.0),
            gamma_length: None,
        };
        assert!(e.validate().is_err());
    }

    #[test]
    fn nonpositive_lengths_rejected() {
        let s = flute(CuffLengths::Explicit(vec![1.0, 0.0]), Twists::Zero);
        assert!(s.validate().is_err());
        let s = flute(
            CuffLengths::Slice(SliceParams { a: -1.0, b: 2.0, count: 5 }),
            Twists::Half,
        );
        assert!(s.validate().is_err());
    }
}
