//! The two junction shear formulas checked against `shear_of_diagonal` on
//! quadrilaterals constructed from the underlying geometric placements.

use hyperbolic_core::{lambert_side, shear_of_diagonal, BoundaryPoint, IdealQuadrilateral};
use proptest::prelude::*;
use shear_fan::{shear_even, shear_odd, OddResidue};

fn f(x: f64) -> BoundaryPoint {
    BoundaryPoint::Finite(x)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    /// An even junction wedge in concentric position: the neighbouring
    /// geodesics are `(-x, x)` and `(-y, y)` with `log(y/x) = eta`, and the
    /// shear of the diagonal `(x, -y)` must be `2 log(sinh(eta / 2))`.
    #[test]
    fn symmetric_quadrilaterals_give_the_even_shear(
        eta in 0.01..5.0f64,
        x in 0.05..2.0f64,
    ) {
        let y = x * eta.exp();
        let q = IdealQuadrilateral::new(f(-x), f(x), f(y), f(-y)).unwrap();
        let got = shear_of_diagonal(&q).unwrap();
        let want = shear_even(eta).unwrap();
        prop_assert!((got - want).abs() <= 1e-9, "{got} vs {want}");
    }

    /// An odd junction wedge flattened onto `(0, inf)`: the feet of the
    /// perpendiculars from the neighbouring geodesics sit at signed
    /// coordinates `t_P = -lambert_side(eta_prev)` and
    /// `t_S = -/+ ell/2 + lambert_side(eta_next)` along the diagonal, so the
    /// off-diagonal vertices lie at `-exp(t_P)` and `exp(t_S)` and the shear
    /// must be `t_S - t_P`.
    #[test]
    fn placed_quadrilaterals_give_the_odd_shear(
        eta_prev in 0.05..3.0f64,
        eta_next in 0.05..3.0f64,
        ell in 0.5..12.0f64,
        res_one in any::<bool>(),
    ) {
        let residue = if res_one { OddResidue::One } else { OddResidue::Three };
        let t_r = match residue {
            OddResidue::One => -0.5 * ell,
            OddResidue::Three => 0.5 * ell,
        };
        let t_p = -lambert_side(eta_prev).unwrap();
        let t_s = t_r + lambert_side(eta_next).unwrap();
        let q = IdealQuadrilateral::new(
            f(-t_p.exp()),
            f(0.0),
            f(t_s.exp()),
            BoundaryPoint::Infinity,
        )
        .unwrap();
        let got = shear_of_diagonal(&q).unwrap();
        let want = shear_odd(eta_prev, eta_next, ell, residue).unwrap();
        prop_assert!((got - want).abs() <= 1e-8, "{got} vs {want}");
    }
}
