mod common;

use common::{fixtures, num};
use num_complex::Complex64;
use proptest::prelude::*;
use stable_cauchy::mc::par_paths;
use stable_cauchy::noise::{generate_subordinated_path, uniform_grid, CharFnAccumulator};
use stable_cauchy::rng::{streams, RngState};
use stable_cauchy::solver::{evolve, simulate_mild_solution};
use stable_cauchy::special::log_gamma;
use stable_cauchy::spectral::{
    existence_integral, hs_norm_sq, marginal_scale, sandwich_check, scheme_scale, SemigroupSpec, Verdict,
};

#[test]
fn hs_norm_matches_closed_forms() {
    let fx = fixtures();
    let spec = SemigroupSpec::power_law(1.0, 1.0, 1.0, 10_000).unwrap();
    for s in ["0.5", "0.01"] {
        let expected = num(&fx["hs_geometric"][s]);
        let got = hs_norm_sq(&spec, s.parse().unwrap()).unwrap();
        assert!(
            (got.value - expected).abs() <= 1e-12 * expected,
            "s = {s}: {got:?} vs {expected}"
        );
    }
    let d3 = SemigroupSpec::heat(3, 10_000).unwrap();
    let got = hs_norm_sq(&d3, 1e-3).unwrap();
    let expected = num(&fx["hs_power_d3_s1e-3"]);
    assert!(
        got.lower() <= expected && expected <= got.upper(),
        "{got:?} vs {expected}"
    );
}

// Upper bound 2 Gamma(d/2) / (d (2a)^{d/2} s^{d/2}); it dominates the sum for d = 1, 2.
fn weyl_integral_bound(d: u32, a: f64, s: f64) -> f64 {
    let h = d as f64 / 2.0;
    2.0 * log_gamma(h).unwrap().exp() / (d as f64 * (2.0 * a * s).powf(h))
}

#[test]
fn small_time_bound_low_dimensions() {
    for d in [1, 2] {
        for (c_lo, c_hi) in [(1.0, 1.0), (0.5, 3.0)] {
            let spec = SemigroupSpec::power_law(c_lo, c_hi, 2.0 / d as f64, 10_000).unwrap();
            for s in [1e-8, 1e-6, 1e-4, 1e-2, 1.0] {
                let v = hs_norm_sq(&spec, s).unwrap();
                assert!(v.upper() <= weyl_integral_bound(d, c_lo, s), "d={d} s={s}");
            }
        }
    }
}

#[test]
fn finite_rank_integral_matches_quadrature_oracle() {
    let spec = SemigroupSpec::explicit(vec![1.0, 2.0, 3.0]).unwrap();
    let r = existence_integral(&spec, 1.5, 1.0, 1e-8).unwrap();
    let expected = num(&fixtures()["finite_rank_integral_a15_1e-8_1"]);
    assert_eq!(r.verdict, Verdict::Finite);
    assert!(r.integral_converged);
    assert!(
        ((r.integral_value - expected) / expected).abs() < 1e-6,
        "{} vs {expected}",
        r.integral_value
    );
    assert!(r.integral_value <= 3f64.powf(0.75));
}

#[test]
fn marginal_scale_matches_oracle() {
    let expected = num(&fixtures()["marginal_scale_l2_a15_t1"]);
    assert!((marginal_scale(2.0, 1.5, 1.0).unwrap() - expected).abs() < 1e-14);
}

#[test]
fn sandwich_bounds_match_quadrature_oracle() {
    let fx = fixtures();
    let spec = SemigroupSpec::power_law(1.0, 1.0, 1.0, 16).unwrap();
    for alpha in [1.0, 1.5] {
        for (m, n) in [(1, 4), (1, 8), (1, 16), (8, 16)] {
            let r = sandwich_check(&spec, alpha, 1.0, m, n, 2_000, RngState::new(5, streams::SANDWICH)).unwrap();
            let frozen = &fx["sandwich_bounds"][format!("{alpha:.1}_{m}_{n}")];
            assert!((r.lower - num(&frozen[0])).abs() < 1e-9 * r.lower, "{alpha} {m} {n}");
            assert!((r.upper - num(&frozen[1])).abs() < 1e-9 * r.upper, "{alpha} {m} {n}");
        }
    }
}

#[test]
fn sandwich_lambda_k_alpha_one_one_to_eight() {
    let spec = SemigroupSpec::power_law(1.0, 1.0, 1.0, 8).unwrap();
    let r = sandwich_check(&spec, 1.0, 1.0, 1, 8, 100_000, RngState::new(9, streams::SANDWICH)).unwrap();
    assert!(r.ordered_within(3.0), "{r:?}");
}

#[test]
fn marginal_law_of_solver_at_fine_step() {
    let (alpha, paths) = (1.2, 20_000);
    let spec = SemigroupSpec::explicit(vec![1.0, 0.0]).unwrap();
    let grid = uniform_grid(1.0, 1000).unwrap();
    let terminal = par_paths(RngState::new(11, streams::SIMULATE), paths, |_, rng| {
        let noise = generate_subordinated_path(2, alpha, &grid, rng).unwrap();
        simulate_mild_solution(&spec, &noise, &[0.0, 0.0])
            .unwrap()
            .terminal()
            .to_vec()
    });
    for (k, lambda) in [1.0, 0.0].into_iter().enumerate() {
        let sigma = marginal_scale(lambda, alpha, 1.0).unwrap();
        let sigma_dt = scheme_scale(lambda, alpha, &grid).unwrap();
        for beta in [0.3, 0.8, 1.5, 2.5, 4.0] {
            let mut acc = CharFnAccumulator::new();
            terminal.iter().for_each(|x| acc.push(beta * x[k]));
            let e = acc.estimate().unwrap();
            let target = (-(sigma * beta).powf(alpha)).exp();
            let allowance = ((-(sigma_dt * beta).powf(alpha)).exp() - target).abs();
            let dev = (e.value - Complex64::new(target, 0.0)).norm();
            assert!(
                dev <= 3.0 * e.std_error() + allowance,
                "k={k} beta={beta}: {dev} vs {}",
                e.std_error()
            );
        }
    }
}

proptest! {
    #[test]
    fn semigroup_property_holds(s in 0.0f64..5.0, t in 0.0f64..5.0, x in proptest::collection::vec(-10.0f64..10.0, 5)) {
        let spec = SemigroupSpec::heat(3, 5).unwrap();
        let two = evolve(&spec, &evolve(&spec, &x, s).unwrap(), t).unwrap();
        let one = evolve(&spec, &x, s + t).unwrap();
        for (a, b) in two.iter().zip(&one) {
            prop_assert!((a - b).abs() <= 1e-13 * a.abs().max(b.abs()).max(1e-300));
        }
    }

    #[test]
    fn hs_enclosure_is_ordered(s in 1e-9f64..10.0, exponent in 0.2f64..3.0) {
        let spec = SemigroupSpec::power_law(1.0, 1.0, exponent, 1000).unwrap();
        let v = hs_norm_sq(&spec, s).unwrap();
        prop_assert!(v.width >= 0.0);
        prop_assert!(v.lower() > 0.0);
    }

    #[test]
    fn marginal_scale_below_undamped(lambda in 0.0f64..50.0, alpha in 0.1f64..1.99, t in 1e-3f64..10.0) {
        let s = marginal_scale(lambda, alpha, t).unwrap();
        prop_assert!(s > 0.0 && s <= t.powf(1.0 / alpha) * (1.0 + 1e-12));
    }
}
