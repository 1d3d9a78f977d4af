use num_rational::BigRational;
use owa_minimax::decomposition::{alpha_to_weights_exact, weights_to_alpha_exact};
use owa_minimax::lp::Bound;
use owa_minimax::owa::FEAS_TOL;
use owa_minimax::{
    alpha_to_weights, disparity, evaluate_owa, kcurve, orness, orness_from_alpha, solve_lp,
    solve_minimax_disparity, weights_to_alpha, LinearProgram, LpStatus, Method, WeightVector,
};
use proptest::prelude::*;

/// Weight vectors of length 2..=max_n, with some exact zeros.
fn weights(max_n: usize) -> impl Strategy<Value = WeightVector> {
    prop::collection::vec(prop_oneof![3 => 0.01f64..1.0, 1 => Just(0.0)], 2..=max_n)
        .prop_filter("nonzero", |v| v.iter().any(|&x| x > 0.0))
        .prop_map(|v| {
            let total: f64 = v.iter().sum();
            WeightVector::with_tolerance(v.iter().map(|x| x / total).collect(), FEAS_TOL).unwrap()
        })
}

fn weights_and_data(max_n: usize) -> impl Strategy<Value = (WeightVector, Vec<f64>)> {
    weights(max_n).prop_flat_map(|w| {
        let n = w.n();
        (Just(w), prop::collection::vec(-100.0f64..100.0, n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn owa_lies_between_min_and_max((w, x) in weights_and_data(12)) {
        let v = evaluate_owa(&w, &x).unwrap();
        let lo = x.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = x.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        prop_assert!(lo - 1e-9 <= v && v <= hi + 1e-9);
    }

    #[test]
    fn owa_is_idempotent(w in weights(12), c in -50.0f64..50.0) {
        let v = evaluate_owa(&w, &vec![c; w.n()]).unwrap();
        prop_assert!((v - c).abs() <= 1e-12 * (1.0 + c.abs()));
    }

    #[test]
    fn owa_is_monotone_and_symmetric((w, x) in weights_and_data(12), bump in 0.0f64..5.0, at in 0usize..12) {
        let mut y = x.clone();
        let i = at % x.len();
        y[i] += bump;
        prop_assert!(evaluate_owa(&w, &y).unwrap() >= evaluate_owa(&w, &x).unwrap() - 1e-12);
        let mut shuffled = x.clone();
        shuffled.rotate_left(i);
        prop_assert_eq!(evaluate_owa(&w, &shuffled).unwrap(), evaluate_owa(&w, &x).unwrap());
    }

    #[test]
    fn reversal_mirrors_orness_and_keeps_disparity(w in weights(30)) {
        let r = w.reverse();
        prop_assert!((orness(&r).value() - (1.0 - orness(&w).value())).abs() < 1e-12);
        prop_assert_eq!(disparity(&r), disparity(&w));
    }

    #[test]
    fn exact_transforms_invert_each_other(w in weights(20)) {
        let exact: Vec<BigRational> =
            w.as_slice().iter().map(|&x| BigRational::from_float(x).unwrap()).collect();
        let alpha = weights_to_alpha_exact(&exact);
        prop_assert_eq!(alpha_to_weights_exact(&alpha), exact);
    }

    #[test]
    fn float_round_trip_for_small_n(w in weights(10)) {
        let back = alpha_to_weights(&weights_to_alpha(&w)).unwrap();
        for (x, y) in w.as_slice().iter().zip(back.as_slice()) {
            prop_assert!((x - y).abs() <= 1e-12);
        }
    }

    #[test]
    fn orness_agrees_across_representations(w in weights(14)) {
        let alpha = weights_to_alpha(&w);
        let direct = orness(&w).value();
        prop_assert!((orness_from_alpha(&alpha).value() - direct).abs() <= 1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Any weighting is a feasible point of the model at its own orness, so
    /// the optimum can be no worse than its disparity.
    #[test]
    fn optimum_beats_every_weighting_at_its_orness(w in weights(9)) {
        let eta = orness(&w).value();
        for method in [Method::WeightSpace, Method::AlphaSpace] {
            let s = solve_minimax_disparity(w.n(), eta, method, None).unwrap();
            prop_assert!(s.delta.unwrap() <= disparity(&w) + 1e-9);
        }
    }

    #[test]
    fn delta_never_grows_with_k(n in 3usize..10, eta in 0.0f64..=1.0) {
        let ks: Vec<usize> = (1..=n).collect();
        let mut last = f64::INFINITY;
        for p in kcurve(n, eta, &ks).unwrap() {
            if let Some(d) = p.delta {
                prop_assert!(d <= last + 1e-9, "k = {}", p.k);
                last = d;
            } else {
                prop_assert!(last.is_infinite(), "infeasible after a feasible level");
            }
        }
        // The full expansion is always feasible.
        prop_assert!(last.is_finite());
    }

    #[test]
    fn complementary_levels_have_equal_delta(n in 2usize..10, eta in 0.0f64..=1.0) {
        let a = solve_minimax_disparity(n, eta, Method::WeightSpace, None).unwrap();
        let b = solve_minimax_disparity(n, 1.0 - eta, Method::WeightSpace, None).unwrap();
        prop_assert!((a.delta.unwrap() - b.delta.unwrap()).abs() <= 1e-8);
    }

    /// Random box-constrained LPs built around a known feasible point. The
    /// simplex optimum must be feasible and no worse than any sampled point.
    #[test]
    fn simplex_beats_sampled_feasible_points(
        (nv, rows, x0, obj, samples) in (2usize..5).prop_flat_map(|nv| (
            Just(nv),
            prop::collection::vec((prop::collection::vec(-3.0f64..3.0, nv), 0.0f64..2.0), 1..5),
            prop::collection::vec(0.0f64..4.0, nv),
            prop::collection::vec(-2.0f64..2.0, nv),
            prop::collection::vec(prop::collection::vec(0.0f64..4.0, nv), 200),
        ))
    ) {
        let mut lp = LinearProgram::new(nv).minimize(obj.clone());
        for v in 0..nv {
            lp.set_bounds(v, Bound::between(0.0, 4.0));
        }
        for (a, slack) in &rows {
            let ax: f64 = a.iter().zip(&x0).map(|(a, x)| a * x).sum();
            lp.add_le(a.clone(), ax + slack);
        }
        let out = solve_lp(&lp).unwrap();
        prop_assert_eq!(out.status, LpStatus::Optimal);
        let z = out.solution.unwrap();
        prop_assert!(lp.max_violation(&z) <= 1e-9);
        let best = out.objective_value.unwrap();
        prop_assert!(best <= lp.objective_value(&x0) + 1e-9);
        for p in samples.iter().filter(|p| lp.max_violation(p) == 0.0) {
            prop_assert!(best <= lp.objective_value(p) + 1e-9);
        }
    }
}
