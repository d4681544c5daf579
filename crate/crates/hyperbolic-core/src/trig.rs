use crate::error::CoreError;
use std::f64::consts::LN_2;

/// `log(sinh(x))` for `x > 0`, stable across the whole positive range.
///
/// Below `1` the direct form is exact enough; above, `x - ln 2 +
/// log1p(-exp(-2x))` avoids overflow of `sinh` out to arbitrarily large `x`.
/// Returns `-inf` at `0` and `NaN` for negative input.
pub fn log_sinh(x: f64) -> f64 {
    if x <= 1.0 {
        x.sinh().ln()
    } else {
        x - LN_2 + (-(-2.0 * x).exp()).ln_1p()
    }
}

/// `log(cosh(x))`, stable for any real `x`.
pub fn log_cosh(x: f64) -> f64 {
    let t = x.abs();
    t - LN_2 + (-2.0 * t).exp().ln_1p()
}

/// `log(exp(a) + exp(b))` without overflow; `-inf` operands act as zeros.
pub fn log_add_exp(a: f64, b: f64) -> f64 {
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    if hi == f64::NEG_INFINITY {
        return f64::NEG_INFINITY;
    }
    if hi == f64::INFINITY {
        return f64::INFINITY;
    }
    hi + (lo - hi).exp().ln_1p()
}

pub(crate) fn lambert_side_unchecked(eta: f64) -> f64 {
    if eta < 1.0 {
        (1.0 / eta.sinh()).asinh()
    } else {
        let t = (-eta).exp();
        -(-2.0 * t / (1.0 + t)).ln_1p()
    }
}

/// Side length `arcsinh(1 / sinh(eta))` of a Lambert quadrilateral whose
/// opposite side has length `eta`.
///
/// Equal to `artanh(sech(eta))` and to `log(coth(eta/2))`; the function is a
/// decreasing involution of `(0, inf)` fixing `arcsinh(1)`. Small arguments
/// use the `arcsinh` form directly, large ones the equivalent
/// `-log1p(-2 e^{-eta} / (1 + e^{-eta}))`, which keeps full relative
/// precision where the value underflows toward `0`.
///
/// Errors when `eta` is not a positive finite number.
pub fn lambert_side(eta: f64) -> Result<f64, CoreError> {
    if !eta.is_finite() || eta <= 0.0 {
        return Err(CoreError::domain("lambert_side requires a positive finite eta"));
    }
    Ok(lambert_side_unchecked(eta))
}

/// Summit length of a Saccheri quadrilateral with the given base and legs:
/// `2 arcsinh(cosh(leg) sinh(base / 2))`.
///
/// Evaluated through `log(cosh) + log(sinh)` so extreme bases and legs stay
/// in range; for large products the `arcsinh` is replaced by its logarithmic
/// asymptote. With `leg = 0` the summit equals the base.
///
/// Errors unless `base > 0` and `leg >= 0`, both finite.
pub fn saccheri_summit(base: f64, leg: f64) -> Result<f64, CoreError> {
    if !base.is_finite() || base <= 0.0 {
        return Err(CoreError::domain("saccheri_summit requires a positive finite base"));
    }
    if !leg.is_finite() || leg < 0.0 {
        return Err(CoreError::domain("saccheri_summit requires a nonnegative finite leg"));
    }
    let w = log_cosh(leg) + log_sinh(0.5 * base);
    if w < 30.0 {
        Ok(2.0 * w.exp().asinh())
    } else {
        Ok(2.0 * (w + LN_2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * a.abs().max(b.abs()).max(1.0)
    }

    #[test]
    fn lambert_side_frozen_values() {
        assert!(close(lambert_side(0.1).unwrap(), 2.9965651211176617, 5e-15));
        assert!(close(lambert_side(2.5).unwrap(), 0.16454021803458780, 5e-15));
    }

    #[test]
    fn lambert_side_fixed_point() {
        let c = 0.88137358701954303_f64;
        assert!(close(lambert_side(c).unwrap(), c, 5e-15));
    }

    #[test]
    fn lambert_side_branches_agree() {
        for x in [0.9_f64, 0.95, 0.999, 1.0, 1.001, 1.05, 1.1] {
            let small = (1.0 / x.sinh()).asinh();
            let t = (-x).exp();
            let large = -(-2.0 * t / (1.0 + t)).ln_1p();
            assert!(close(small, large, 1e-13), "branch gap at {x}");
        }
    }

    #[test]
    fn lambert_side_domain() {
        assert!(lambert_side(0.0).is_err());
        assert!(lambert_side(-1.0).is_err());
        assert!(lambert_side(f64::INFINITY).is_err());
        assert!(lambert_side(f64::NAN).is_err());
    }

    #[test]
    fn log_sinh_wide_range() {
        assert!(close(log_sinh(1e-18), -41.446531673892822, 5e-15));
        assert!(close(log_sinh(0.25), -1.3758993101271339, 5e-15));
        assert!(close(log_sinh(1.0), 0.16143936157119563, 5e-15));
        assert!(close(log_sinh(800.0), 799.30685281944005, 5e-15));
    }

    #[test]
    fn saccheri_frozen_values() {
        assert!(close(saccheri_summit(1.0, 1.0).unwrap(), 1.4717208827259037, 5e-15));
        assert!(close(saccheri_summit(0.7, 2.3).unwrap(), 2.7001465661573567, 5e-15));
    }

    #[test]
    fn saccheri_zero_leg_returns_base() {
        for base in [1e-6, 0.3, 1.0, 7.5, 40.0] {
            assert!(close(saccheri_summit(base, 0.0).unwrap(), base, 1e-12));
        }
    }

    #[test]
    fn saccheri_domain() {
        assert!(saccheri_summit(0.0, 1.0).is_err());
        assert!(saccheri_summit(1.0, -0.1).is_err());
    }

    #[test]
    fn log_add_exp_basics() {
        assert!(close(log_add_exp(0.0, 0.0), LN_2, 1e-15));
        assert_eq!(log_add_exp(f64::NEG_INFINITY, 3.0), 3.0);
        assert_eq!(log_add_exp(f64::NEG_INFINITY, f64::NEG_INFINITY), f64::NEG_INFINITY);
    }
}
