//! Each fan geodesic must separate its predecessor from its successor on
//! the boundary circle.

use hyperbolic_core::cayley_to_disk;
use proptest::prelude::*;
use shear_fan::{realize_fan, GeodesicFan, ShearSequence};
use std::f64::consts::TAU;

fn angle(p: hyperbolic_core::BoundaryPoint) -> f64 {
    cayley_to_disk(p).disk_angle().expect("half-plane point")
}

fn in_ccw_arc(start: f64, end: f64, x: f64) -> bool {
    let span = (end - start).rem_euclid(TAU);
    (x - start).rem_euclid(TAU) < span
}

fn assert_separation(fan: &GeodesicFan) {
    for m in 2..fan.len() {
        let prev_free = angle(fan.endpoints(m - 2).unwrap().0);
        let (u, v) = fan.endpoints(m - 1).unwrap();
        let next_free = angle(fan.endpoints(m).unwrap().1);
        let (u, v) = (angle(u), angle(v));
        let p_in = in_ccw_arc(u, v, prev_free);
        let q_in = in_ccw_arc(u, v, next_free);
        assert_ne!(p_in, q_in, "g{m} fails to separate its neighbours");
    }
}

#[test]
fn zero_shear_fan_nests() {
    let sh = ShearSequence::new(0.0, vec![0.0; 40]).unwrap();
    let fan = realize_fan(&sh, 40).unwrap();
    assert_separation(&fan);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn random_fans_nest(shears in proptest::collection::vec(-2.0..2.0f64, 1..20)) {
        let k = shears.len();
        let sh = ShearSequence::new(0.0, shears).unwrap();
        let fan = realize_fan(&sh, k + 2).unwrap();
        assert_separation(&fan);
    }
}
