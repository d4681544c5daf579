use crate::error::FanError;
use fenchel_nielsen::LengthSequences;

/// Two-sided comparison series for the escaping path: term `n` bounds the
/// `n`-th pair of horocyclic arcs by `exp(-sigma_{n-1}/2) +
/// exp(-sigma_{n+1}/2)` (with `sigma_0 = 0`), so the path length diverges
/// together with these partial sums.
#[derive(Clone, Debug, PartialEq)]
pub struct EscapePathEstimate {
    pub terms: Vec<f64>,
    pub partial_sums: Vec<f64>,
}

/// Builds the comparison series from derived length sequences; needs at
/// least two alternating sums.
pub fn escape_path_estimate(seq: &LengthSequences) -> Result<EscapePathEstimate, FanError> {
    let sigma = &seq.sigma;
    if sigma.len() < 2 {
        return Err(FanError::InsufficientData(
            "escape estimate needs at least two alternating sums".to_string(),
        ));
    }
    let mut terms = Vec::with_capacity(sigma.len() - 1);
    let mut partial_sums = Vec::with_capacity(sigma.len() - 1);
    let mut acc = 0.0f64;
    for n in 1..sigma.len() {
        let prev = if n >= 2 { sigma[n - 2] } else { 0.0 };
        let next = sigma[n];
        let term = (-0.5 * prev).exp() + (-0.5 * next).exp();
        acc += term;
        terms.push(term);
        partial_sums.push(acc);
    }
    Ok(EscapePathEstimate { terms, partial_sums })
}
