use fenchel_nielsen::{eta_pentagon, sigma_sequence, slice_lengths, SliceParams};
use proptest::prelude::*;

fn positive_lengths() -> impl Strategy<Value = Vec<f64>> {
    proptest::collection::vec(0.05..20.0f64, 2..80)
}

fn nondecreasing_lengths() -> impl Strategy<Value = Vec<f64>> {
    (0.5..8.0f64, proptest::collection::vec(0.0..2.0f64, 1..80)).prop_map(|(first, steps)| {
        let mut out = vec![first];
        for s in steps {
            out.push(out.last().unwrap() + s);
        }
        out
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn sigma_recurrence_holds(ell in positive_lengths()) {
        let sigma = sigma_sequence(&ell);
        prop_assert_eq!(sigma[0], ell[0]);
        for i in 1..ell.len() {
            let lhs = sigma[i] + sigma[i - 1];
            prop_assert!((lhs - ell[i]).abs() <= 1e-12 * ell[i].abs().max(1.0));
        }
    }

    #[test]
    fn sigma_bounded_for_nondecreasing(ell in nondecreasing_lengths()) {
        let sigma = sigma_sequence(&ell);
        for (i, &s) in sigma.iter().enumerate() {
            prop_assert!(s >= 0.0, "sigma[{i}] = {s} negative");
            prop_assert!(s <= ell[i] + 1e-12, "sigma[{i}] = {s} above ell = {}", ell[i]);
        }
    }

    #[test]
    fn slice_sigma_is_exactly_split(a in 0.2..6.0f64, b in 0.2..6.0f64) {
        let ell = slice_lengths(&SliceParams { a, b, count: 200 });
        let sigma = sigma_sequence(&ell);
        for (i, &s) in sigma.iter().enumerate() {
            let k = (i / 2 + 2) as f64;
            let want = if i % 2 == 0 { a * k.ln() } else { b * k.ln() };
            prop_assert!((s - want).abs() <= 1e-11 * want.max(1.0), "sigma[{i}]");
        }
    }

    #[test]
    fn pentagon_eta_brackets_for_increasing_lengths(
        l1 in 4.0..9.0f64,
        step in 0.0..2.0f64,
    ) {
        let l2 = l1 + step;
        let eta = eta_pentagon(l1, l2).unwrap();
        prop_assert!(eta > (-0.5 * l2).exp(), "lower bound at ({l1}, {l2})");
        prop_assert!(eta < 8.0 * (-0.5 * l1).exp(), "upper bound at ({l1}, {l2})");
    }
}
