//! Property tests: interval containment of value arithmetic, gamma-function
//! identities, Hurwitz recurrence, zero slopes, and directed-bound logic.

use proptest::prelude::*;

use pleijel_core::specfun::{bessel_first_zero, hurwitz_zeta, ln_gamma};
use pleijel_core::{GroupSpec, Method, Value};

fn val(est: f64, err: f64) -> Value {
    Value::new(est, err, Method::Series)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn add_interval_contains_image(
        a in -1e6f64..1e6, b in -1e6f64..1e6,
        ea in 0f64..10.0, eb in 0f64..10.0,
        ta in -1f64..1.0, tb in -1f64..1.0,
    ) {
        let x = val(a, ea);
        let y = val(b, eb);
        let pa = a + ta * ea;
        let pb = b + tb * eb;
        let s = x.add(y);
        prop_assert!(s.contains(pa + pb));
        let d = x.sub(y);
        prop_assert!(d.contains(pa - pb));
    }

    #[test]
    fn mul_interval_contains_image(
        a in -1e3f64..1e3, b in -1e3f64..1e3,
        ea in 0f64..5.0, eb in 0f64..5.0,
        ta in -1f64..1.0, tb in -1f64..1.0,
    ) {
        let x = val(a, ea);
        let y = val(b, eb);
        let p = x.mul(y);
        prop_assert!(p.contains((a + ta * ea) * (b + tb * eb)));
    }

    #[test]
    fn div_interval_contains_image(
        a in -1e3f64..1e3, b in 1f64..1e3,
        ea in 0f64..5.0, eb in 0f64..0.5,
        ta in -1f64..1.0, tb in -1f64..1.0,
    ) {
        let x = val(a, ea);
        let y = val(b, eb);
        let q = x.div(y);
        prop_assert!(q.contains((a + ta * ea) / (b + tb * eb)));
    }

    #[test]
    fn powf_interval_contains_image(
        a in 0.1f64..50.0, rel in 0f64..0.01,
        p in -6f64..6.0, t in -1f64..1.0,
    ) {
        let x = val(a, rel * a);
        let y = x.powf(p);
        prop_assert!(y.contains((a + t * rel * a).powf(p)));
    }

    #[test]
    fn reflection_identity(x in 1e-3f64..0.999) {
        // ln G(x) + ln G(1-x) = ln(pi / sin(pi x))
        let lhs = ln_gamma(x).unwrap().estimate + ln_gamma(1.0 - x).unwrap().estimate;
        let rhs = (std::f64::consts::PI / (std::f64::consts::PI * x).sin()).ln();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs().max(1.0), "x = {x}: {lhs} vs {rhs}");
    }

    #[test]
    fn duplication_identity(x in 0.1f64..50.0) {
        // ln G(2x) = ln G(x) + ln G(x + 1/2) + (2x - 1) ln 2 - (1/2) ln pi
        let lhs = ln_gamma(2.0 * x).unwrap().estimate;
        let rhs = ln_gamma(x).unwrap().estimate
            + ln_gamma(x + 0.5).unwrap().estimate
            + (2.0 * x - 1.0) * std::f64::consts::LN_2
            - 0.5 * std::f64::consts::PI.ln();
        prop_assert!(
            (lhs - rhs).abs() <= 1e-11 * lhs.abs().max(1.0),
            "x = {x}: {lhs} vs {rhs}"
        );
    }

    #[test]
    fn hurwitz_recurrence(s in 2u32..=16, a in 0.1f64..500.0) {
        // zeta(s, a) = a^(-s) + zeta(s, a + 1)
        let lhs = hurwitz_zeta(s, a).unwrap();
        let rhs = a.powi(-(s as i32)) + hurwitz_zeta(s, a + 1.0).unwrap().estimate;
        prop_assert!(
            (lhs.estimate - rhs).abs() <= 1e-12 * lhs.estimate.abs(),
            "s = {s}, a = {a}"
        );
    }

    #[test]
    fn group_dimension_consistency(n in 0u32..20, k in 0u32..20) {
        prop_assume!(n + k >= 1);
        let g = GroupSpec::new(n, k).unwrap();
        let q = g.homogeneous_dimension();
        prop_assert!(q >= 1);
        if n >= 1 {
            prop_assert_eq!(q, 2 * n + 2 + k);
            prop_assert_eq!(GroupSpec::new(n, 0).unwrap().homogeneous_dimension(), 2 * n + 2);
        } else {
            prop_assert_eq!(q, k);
        }
    }
}

#[test]
fn zero_slope_exceeds_one_on_grid() {
    // the first zero grows with slope > 1 in the order; checked as a finite
    // difference with step 1e-3 across the grid
    let delta = 1e-3;
    let mut nu = 0.0f64;
    while nu <= 199.5 {
        let a = bessel_first_zero(nu).unwrap().estimate;
        let b = bessel_first_zero(nu + delta).unwrap().estimate;
        let slope = (b - a) / delta;
        assert!(slope > 0.999, "slope {slope} at nu = {nu}");
        nu += 0.5;
    }
}

#[test]
fn directed_bound_sign_logic() {
    use pleijel_core::faberkrahn::fk_from_iso;
    use pleijel_core::isoperimetry::iso_lower_heisenberg;
    use pleijel_core::pleijel::gamma_from;
    use pleijel_core::weyl::weyl_heisenberg;
    use pleijel_core::{Direction, Hypothesis};

    // a *larger* lower bound on the Faber-Krahn constant must give a
    // *smaller* upper bound on the Pleijel constant
    let iso = iso_lower_heisenberg(1).unwrap();
    let fk = fk_from_iso(&iso, 4).unwrap();
    assert_eq!(fk.direction, Direction::Lower);
    assert_eq!(fk.hypothesis, Hypothesis::Unconditional);
    let w = weyl_heisenberg(1).unwrap();
    let gamma = gamma_from(&fk, w, 4.0).unwrap();
    assert_eq!(gamma.direction, Direction::Upper);

    let mut bigger = fk.clone();
    bigger.value = bigger.value.scale(1.5);
    let gamma2 = gamma_from(&bigger, w, 4.0).unwrap();
    assert!(gamma2.value.estimate < gamma.value.estimate);
}

#[test]
fn iso_lift_monotone_in_input() {
    use pleijel_core::isoperimetry::{iso_lift, iso_lower_heisenberg, pansu_isoperimetric};
    for k in [1u32, 2, 5, 10] {
        let g = GroupSpec::new(1, k).unwrap();
        let low = iso_lift(g, &iso_lower_heisenberg(1).unwrap()).unwrap();
        let high = iso_lift(g, &pansu_isoperimetric(1).unwrap()).unwrap();
        assert!(
            high.bound.value.estimate > low.bound.value.estimate,
            "monotonicity failed at k = {k}"
        );
    }
}

#[test]
fn fk_best_monotone_under_hypothesis() {
    use pleijel_core::faberkrahn::fk_best;
    use pleijel_core::Hypothesis;
    for n in 1..=5u32 {
        for k in 0..=10u32 {
            let g = GroupSpec::new(n, k).unwrap();
            let un = fk_best(g, Hypothesis::Unconditional).unwrap();
            let pa = fk_best(g, Hypothesis::PansuConjecture).unwrap();
            assert!(
                pa.value.estimate >= un.value.estimate,
                "({n},{k}): conditional best below unconditional"
            );
        }
    }
}

#[test]
fn route_dominance_is_recorded_not_assumed() {
    use pleijel_core::faberkrahn::{fk_candidates, FkRouteName};
    use pleijel_core::Hypothesis;
    // the winner varies across the grid: the Jerison-Lee route loses at
    // (1,0) but the lift route wins somewhere, so no fixed-winner invariant
    let mut winners = std::collections::BTreeSet::new();
    for n in 1..=3u32 {
        for k in 0..=10u32 {
            let routes = fk_candidates(GroupSpec::new(n, k).unwrap(), Hypothesis::Unconditional)
                .unwrap();
            let best = routes
                .iter()
                .max_by(|a, b| {
                    a.bound.value.estimate.partial_cmp(&b.bound.value.estimate).unwrap()
                })
                .unwrap();
            winners.insert(format!("{:?}", best.name));
            if k == 2 {
                assert!(routes
                    .iter()
                    .all(|r| !matches!(r.name, FkRouteName::FromSobolevLift)));
            }
        }
    }
    assert!(winners.len() > 1, "a single route should not dominate everywhere: {winners:?}");
}
