use crate::error::FanError;
use fenchel_nielsen::LengthSequences;
use hyperbolic_core::{lambert_side, log_sinh};

/// Parity of a junction index, which fixes the local normal form of the
/// wedge there: at even junctions the incoming geodesic closes at local `0`
/// and the wedge opens at infinity, at odd junctions the roles are swapped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JunctionParity {
    Even,
    Odd,
}

impl JunctionParity {
    /// Parity of junction `m >= 2`.
    pub fn of_junction(m: usize) -> Self {
        if m % 2 == 0 {
            JunctionParity::Even
        } else {
            JunctionParity::Odd
        }
    }
}

/// Residue class mod 4 of an odd junction index; it decides the sign of the
/// half-cuff term in the odd shear formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OddResidue {
    One,
    Three,
}

impl OddResidue {
    /// Residue of an odd junction index, `None` for even ones.
    pub fn of_junction(m: usize) -> Option<Self> {
        match m % 4 {
            1 => Some(OddResidue::One),
            3 => Some(OddResidue::Three),
            _ => None,
        }
    }
}

/// Shear at an even junction whose wedge is crossed by an orthogeodesic of
/// length `eta`: `2 log(sinh(eta / 2))`.
pub fn shear_even(eta: f64) -> Result<f64, FanError> {
    if !eta.is_finite() || eta <= 0.0 {
        return Err(FanError::domain(format!(
            "shear_even requires a positive finite eta, got {eta}"
        )));
    }
    Ok(2.0 * log_sinh(0.5 * eta))
}

/// Shear at an odd junction between orthogeodesics of lengths `eta_prev` and
/// `eta_next`, separated by a cuff of length `ell`:
/// `lambert_side(eta_prev) + lambert_side(eta_next) -/+ ell / 2`,
/// minus for residue one, plus for residue three.
pub fn shear_odd(
    eta_prev: f64,
    eta_next: f64,
    ell: f64,
    residue: OddResidue,
) -> Result<f64, FanError> {
    if !ell.is_finite() || ell <= 0.0 {
        return Err(FanError::domain(format!(
            "shear_odd requires a positive finite cuff length, got {ell}"
        )));
    }
    let half = match residue {
        OddResidue::One => -0.5 * ell,
        OddResidue::Three => 0.5 * ell,
    };
    Ok(lambert_side(eta_prev)? + lambert_side(eta_next)? + half)
}

/// Shear coordinates of a geodesic fan: the anchor `s1` fixing the first
/// horocyclic arc, then one shear per junction index `m = 2, 3, ...`.
#[derive(Clone, Debug, PartialEq)]
pub struct ShearSequence {
    s1: f64,
    shears: Vec<f64>,
}

impl ShearSequence {
    /// Wraps raw shear values; every entry and the anchor must be finite.
    pub fn new(s1: f64, shears: Vec<f64>) -> Result<Self, FanError> {
        if !s1.is_finite() {
            return Err(FanError::domain("shear anchor s1 must be finite"));
        }
        for (i, &s) in shears.iter().enumerate() {
            if !s.is_finite() {
                return Err(FanError::domain(format!(
                    "shear at junction {} must be finite, got {s}",
                    i + 2
                )));
            }
        }
        Ok(ShearSequence { s1, shears })
    }

    /// The anchor value for the first horocyclic arc.
    pub fn s1(&self) -> f64 {
        self.s1
    }

    /// Shear at junction `m`, defined for `2 <= m <= max_junction`.
    pub fn shear(&self, m: usize) -> Option<f64> {
        if m < 2 {
            return None;
        }
        self.shears.get(m - 2).copied()
    }

    /// Largest junction index carrying a shear; `1` when no shears exist.
    pub fn max_junction(&self) -> usize {
        self.shears.len() + 1
    }

    /// All shears in junction order starting at `m = 2`.
    pub fn shears(&self) -> &[f64] {
        &self.shears
    }
}

/// Builds the junction shears of the fan determined by derived length
/// sequences: even junctions take `shear_even` of the enclosing
/// orthogeodesic, odd junctions take `shear_odd` of the two neighbouring
/// orthogeodesics and the cuff between them, with the residue of the
/// junction index fixing the sign.
///
/// With `L` orthogeodesics the junction indices run over `2 ..= 2L`.
pub fn assemble_shears(seq: &LengthSequences, s1: f64) -> Result<ShearSequence, FanError> {
    let n_eta = seq.eta.len();
    if n_eta == 0 {
        return Err(FanError::insufficient("at least one orthogeodesic length is needed"));
    }
    if seq.ell.len() != n_eta + 1 {
        return Err(FanError::domain(format!(
            "mismatched sequence lengths: {} cuffs with {} orthogeodesics",
            seq.ell.len(),
            n_eta
        )));
    }
    let mut shears = Vec::with_capacity(2 * n_eta - 1);
    for m in 2..=2 * n_eta {
        let s = if m % 2 == 0 {
            shear_even(seq.eta[m / 2 - 1])?
        } else {
            let j = (m - 1) / 2;
            let residue = OddResidue::of_junction(m).expect("m is odd");
            shear_odd(seq.eta[j - 1], seq.eta[j], seq.ell[j], residue)?
        };
        shears.push(s);
    }
    ShearSequence::new(s1, shears)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn shear_even_frozen_values() {
        assert!(close(shear_even(1.0).unwrap(), -1.3036446518940544, 1e-14));
        assert!(close(shear_even(0.5).unwrap(), -2.7517986202542678, 1e-14));
    }

    #[test]
    fn shear_even_vanishes_at_double_lambert_fixed_point() {
        assert!(close(shear_even(1.7627471740390861).unwrap(), 0.0, 1e-14));
    }

    #[test]
    fn shear_odd_frozen_values() {
        let one = shear_odd(0.5, 0.3, 6.0, OddResidue::One).unwrap();
        let three = shear_odd(0.5, 0.3, 6.0, OddResidue::Three).unwrap();
        assert!(close(one, 0.31140997103066905, 1e-14));
        assert!(close(three, 6.3114099710306691, 1e-14));
    }

    #[test]
    fn residues_follow_index() {
        assert_eq!(OddResidue::of_junction(5), Some(OddResidue::One));
        assert_eq!(OddResidue::of_junction(3), Some(OddResidue::Three));
        assert_eq!(OddResidue::of_junction(4), None);
        assert_eq!(JunctionParity::of_junction(4), JunctionParity::Even);
        assert_eq!(JunctionParity::of_junction(7), JunctionParity::Odd);
    }

    #[test]
    fn assemble_covers_expected_index_set() {
        let seq = LengthSequences {
            ell: vec![2.0, 2.0, 2.0, 2.0],
            eta: vec![1.5, 1.5, 1.5],
            sigma: vec![2.0, 0.0, 2.0, 0.0],
        };
        let sh = assemble_shears(&seq, 0.25).unwrap();
        assert_eq!(sh.s1(), 0.25);
        assert_eq!(sh.max_junction(), 6);
        for m in 2..=6 {
            assert!(sh.shear(m).is_some(), "missing shear at {m}");
        }
        assert!(sh.shear(1).is_none());
        assert!(sh.shear(7).is_none());
    }

    #[test]
    fn assemble_dispatches_by_parity_and_residue() {
        let (e1, e2, e3) = (1.5, 0.9, 2.2);
        let (l2, l3) = (3.0, 4.0);
        let seq = LengthSequences {
            ell: vec![2.5, l2, l3, 5.0],
            eta: vec![e1, e2, e3],
            sigma: vec![0.0; 4],
        };
        let sh = assemble_shears(&seq, 0.0).unwrap();
        assert_eq!(sh.shear(2).unwrap(), shear_even(e1).unwrap());
        assert_eq!(sh.shear(4).unwrap(), shear_even(e2).unwrap());
        assert_eq!(sh.shear(6).unwrap(), shear_even(e3).unwrap());
        assert_eq!(
            sh.shear(3).unwrap(),
            shear_odd(e1, e2, l2, OddResidue::Three).unwrap()
        );
        assert_eq!(
            sh.shear(5).unwrap(),
            shear_odd(e2, e3, l3, OddResidue::One).unwrap()
        );
    }

    #[test]
    fn domains_are_enforced() {
        assert!(shear_even(0.0).is_err());
        assert!(shear_odd(1.0, -1.0, 2.0, OddResidue::One).is_err());
        assert!(shear_odd(1.0, 1.0, 0.0, OddResidue::One).is_err());
        assert!(ShearSequence::new(f64::NAN, vec![]).is_err());
        assert!(ShearSequence::new(0.0, vec![f64::INFINITY]).is_err());
    }
}
