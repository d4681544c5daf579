//! Report types carrying a classification verdict and its evidence.

use shear_fan::AccumulationVerdict;

use crate::series::SeriesVerdict;

/// Whether the Fuchsian group of the surface is of the first kind, meaning
/// its limit set is the whole boundary circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KindVerdict {
    FirstKind,
    SecondKind,
    Indeterminate,
}

impl std::fmt::Display for KindVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = match self {
            KindVerdict::FirstKind => "FIRST_KIND",
            KindVerdict::SecondKind => "SECOND_KIND",
            KindVerdict::Indeterminate => "INDETERMINATE",
        };
        f.write_str(tag)
    }
}

/// Whether the surface is parabolic, meaning it carries no Green's function,
/// equivalently the geodesic flow is ergodic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParabolicVerdict {
    Parabolic,
    NotParabolic,
    Indeterminate,
}

impl std::fmt::Display for ParabolicVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = match self {
            ParabolicVerdict::Parabolic => "PARABOLIC",
            ParabolicVerdict::NotParabolic => "NOT_PARABOLIC",
            ParabolicVerdict::Indeterminate => "INDETERMINATE",
        };
        f.write_str(tag)
    }
}

/// A series verdict together with a human-readable formula label.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledSeries {
    /// Formula of the analyzed series, such as `sum exp(-l_n / 2)`.
    pub label: String,
    /// Verdict and measurements for that series.
    pub verdict: SeriesVerdict,
}

/// Numeric evidence backing a classification.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Evidence {
    /// Every series the classifier evaluated, in the order consulted.
    pub series: Vec<LabeledSeries>,
    /// Geodesic-fan accumulation verdict, when the twist pattern admits one.
    pub fan: Option<AccumulationVerdict>,
}

/// Outcome of classifying a surface description.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassificationReport {
    /// First kind / second kind call for the covering group.
    pub kind_verdict: KindVerdict,
    /// Parabolic / not parabolic call for the surface.
    pub parabolic_verdict: ParabolicVerdict,
    /// Result labels of the criteria that produced the verdict,
    /// such as `Thm 5.1; Cor 1.4`.
    pub theorem_used: String,
    /// Measurements the verdict rests on.
    pub evidence: Evidence,
    /// Warnings about inapplicable hypotheses or internal disagreements.
    pub caveats: Vec<String>,
}
