use std::f64::consts::PI;

use chordprop::{
    coherent_state, energy, evaluate, marginal, propagate, thermal_state, to_wigner, Axis, ChordVector,
    GaussianChordState, Mat2, ModelParams, Vec2,
};
use num_complex::Complex64;
use proptest::prelude::*;

/// Random states obeying the uncertainty bound.
fn physical_state() -> impl Strategy<Value = GaussianChordState> {
    (0.5..4.0f64, 0.5..4.0f64, -0.95..0.95f64, -3.0..3.0f64, -3.0..3.0f64).prop_map(|(a, b, t, x, p)| {
        let c = t * (a * b - 0.25).sqrt();
        GaussianChordState::new(Mat2::new(a, c, c, b), Vec2::new(x, p)).unwrap()
    })
}

/// `−½ (∂²_k + ∂²_s) w` at the origin by central differences.
fn finite_difference_energy(state: &GaussianChordState, h: f64) -> f64 {
    let w = |k: f64, s: f64| evaluate(state, ChordVector::new(k, s));
    let centre = w(0.0, 0.0);
    let d2k = (w(h, 0.0) - centre * 2.0 + w(-h, 0.0)) / (h * h);
    let d2s = (w(0.0, h) - centre * 2.0 + w(0.0, -h)) / (h * h);
    (-(d2k + d2s) * 0.5).re
}

/// Trapezoid sum of `∫∫ f(x, y) dx dy` on a square grid.
fn grid_sum<F: Fn(f64, f64) -> Complex64>(f: F, centre: (f64, f64), half_width: f64, n: usize) -> Complex64 {
    let h = 2.0 * half_width / (n - 1) as f64;
    let mut total = Complex64::new(0.0, 0.0);
    for i in 0..n {
        let x = centre.0 - half_width + i as f64 * h;
        for j in 0..n {
            let y = centre.1 - half_width + j as f64 * h;
            total += f(x, y);
        }
    }
    total * h * h
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn normalization_and_hermitian_symmetry(state in physical_state(), k in -4.0..4.0f64, s in -4.0..4.0f64) {
        prop_assert_eq!(evaluate(&state, ChordVector::origin()), Complex64::new(1.0, 0.0));
        let w = evaluate(&state, ChordVector::new(k, s));
        let w_neg = evaluate(&state, ChordVector::new(-k, -s));
        prop_assert!((w_neg - w.conj()).norm() < 1e-15);
        prop_assert!(w.norm() <= 1.0 + 1e-15);
    }

    #[test]
    fn energy_is_the_second_derivative_at_origin(state in physical_state()) {
        let exact = energy(&state);
        let fd = finite_difference_energy(&state, 1e-4);
        prop_assert!((fd - exact).abs() <= 1e-6 * exact.max(1.0), "fd {fd} exact {exact}");
    }

    #[test]
    fn marginals_integrate_to_one(state in physical_state()) {
        for axis in [Axis::Position, Axis::Momentum] {
            let m = marginal(&state, axis);
            let width = 12.0 * m.variance.sqrt();
            let n = 2001;
            let h = 2.0 * width / (n - 1) as f64;
            let total: f64 = (0..n).map(|i| m.density(m.mean - width + i as f64 * h)).sum::<f64>() * h;
            prop_assert!((total - 1.0).abs() < 1e-10);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn wigner_transforms_back_to_chord_samples(state in physical_state(), k in -1.5..1.5f64, s in -1.5..1.5f64) {
        let wig = to_wigner(&state).unwrap();
        let spread = state.sigma_mat().diagonal().amax().sqrt();
        let forward = grid_sum(
            |q, p| Complex64::from_polar(wig.density(q, p), k * q + s * p),
            wig.center,
            10.0 * spread,
            301,
        );
        let direct = evaluate(&state, ChordVector::new(k, s));
        prop_assert!((forward - direct).norm() < 1e-6, "{forward} vs {direct}");
    }
}

#[test]
fn coherent_state_energies() {
    assert_eq!(energy(&coherent_state(0.0, 0.0)), 0.5);
    assert_eq!(energy(&coherent_state(1.0, 0.0)), 1.0);
    assert_eq!(energy(&coherent_state(3.0, 4.0)), 13.0);
    let fd = finite_difference_energy(&coherent_state(1.0, 1.0), 1e-4);
    assert!((fd - 1.5).abs() < 1e-6);
}

#[test]
fn evaluate_worked_values() {
    let e = (-1.0f64).exp();
    let g = evaluate(&coherent_state(0.0, 0.0), ChordVector::new(2.0, 0.0));
    assert!((g - Complex64::new(e, 0.0)).norm() < 1e-16);
    let c = evaluate(&coherent_state(1.0, 0.0), ChordVector::new(2.0, 0.0));
    assert!((c - Complex64::from_polar(e, 2.0)).norm() < 1e-16);
}

#[test]
fn ground_state_wigner_is_the_standard_gaussian() {
    let w = to_wigner(&coherent_state(0.0, 0.0)).unwrap();
    assert!((w.density(0.0, 0.0) - 1.0 / PI).abs() < 1e-15);
    assert!((w.density(1.0, -0.5) - (-1.25f64).exp() / PI).abs() < 1e-15);
    assert!((w.covariance() - Mat2::identity() * 0.5).amax() < 1e-15);
}

#[test]
fn thermal_marginal_variance() {
    let st = thermal_state(5.0).unwrap();
    let m = marginal(&st, Axis::Position);
    assert_eq!((m.mean, m.variance), (0.0, 5.0));
    let m = marginal(&coherent_state(2.0, -1.0), Axis::Momentum);
    assert_eq!((m.mean, m.variance), (-1.0, 0.5));
}

/// Inverse transform of the chord samples on a 256² grid, compared with the
/// closed-form Wigner density of a propagated Caldeira-Leggett state.
#[test]
fn propagated_wigner_matches_inverse_transform() {
    let state = propagate(&coherent_state(2.0, 0.0), &ModelParams::cl_under(0.2, 5.0), 0.0, 1.0).unwrap();
    let wig = to_wigner(&state).unwrap();
    let n = 256;
    let half = 8.0;
    let h = 2.0 * half / n as f64;
    let samples: Vec<(f64, f64, Complex64)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (-half + i as f64 * h, -half + j as f64 * h)))
        .map(|(k, s)| (k, s, evaluate(&state, ChordVector::new(k, s))))
        .collect();
    for (q, p) in [(2.0, 0.0), (1.5, -0.7), (0.5, 1.0), (3.2, 0.4)] {
        let sum: Complex64 = samples.iter().map(|(k, s, w)| w * Complex64::from_polar(1.0, -(k * q + s * p))).sum();
        let numeric = sum.re * h * h / (4.0 * PI * PI);
        let closed = wig.density(q, p);
        assert!((numeric - closed).abs() <= 1e-6 * closed, "({q},{p}): {numeric} vs {closed}");
    }
}
