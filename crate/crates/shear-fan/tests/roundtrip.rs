use hyperbolic_core::shear_of_diagonal;
use proptest::prelude::*;
use shear_fan::{horocyclic_lengths, measure_path, realize_fan, ShearSequence};

fn shear_vec(max_abs: f64, max_len: usize) -> impl Strategy<Value = Vec<f64>> {
    proptest::collection::vec(-max_abs..max_abs, 1..max_len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn measured_arcs_match_alternating_sums(
        shears in shear_vec(3.0, 31),
        s1 in -3.0..3.0f64,
    ) {
        let k = shears.len();
        let sh = ShearSequence::new(s1, shears).unwrap();
        let fan = realize_fan(&sh, k + 2).unwrap();
        prop_assert!(fan.truncation().is_none());
        let measured = measure_path(&fan, s1).unwrap();
        let formula = horocyclic_lengths(&sh, k + 1).unwrap();
        prop_assert_eq!(measured.len(), formula.len());
        for (i, (a, b)) in measured.log_lengths.iter().zip(&formula.log_lengths).enumerate() {
            prop_assert!((a - b).abs() <= 1e-9, "arc {i}: {a} vs {b}");
        }
        let (ta, tb) = (measured.total(), formula.total());
        prop_assert!((ta - tb).abs() <= 1e-9 * ta.max(1.0));
    }

    #[test]
    fn local_junction_quads_return_their_shears(shears in shear_vec(5.0, 51)) {
        let k = shears.len();
        let sh = ShearSequence::new(0.0, shears.clone()).unwrap();
        let fan = realize_fan(&sh, k + 2).unwrap();
        for m in 2..=k + 1 {
            let q = fan.junction_quad_local(m).unwrap();
            let s = shear_of_diagonal(&q).unwrap();
            prop_assert!((s - shears[m - 2]).abs() <= 1e-12, "junction {m}");
        }
    }

    #[test]
    fn global_junction_quads_return_their_shears(shears in shear_vec(1.0, 6)) {
        let k = shears.len();
        let sh = ShearSequence::new(0.0, shears.clone()).unwrap();
        let fan = realize_fan(&sh, k + 2).unwrap();
        for m in 2..=k + 1 {
            let q = fan.junction_quad_global(m).unwrap();
            let s = shear_of_diagonal(&q).unwrap();
            prop_assert!((s - shears[m - 2]).abs() <= 1e-7, "junction {m}");
        }
    }

    #[test]
    fn adjacent_arc_products_follow_the_shears(
        shears in shear_vec(4.0, 40),
        s1 in -2.0..2.0f64,
    ) {
        let k = shears.len();
        let sh = ShearSequence::new(s1, shears.clone()).unwrap();
        let path = horocyclic_lengths(&sh, k + 1).unwrap();
        for m in 2..=k + 1 {
            let sum = path.log_lengths[m - 1] + path.log_lengths[m - 2];
            let want = if m % 2 == 0 { shears[m - 2] } else { -shears[m - 2] };
            prop_assert!((sum - want).abs() <= 1e-12 * want.abs().max(1.0), "junction {m}");
        }
    }
}
