use chordprop::oracle::{drive_quadrature, flow_map, kernel_quadrature, OracleConfig};
use chordprop::phase_maps::{
    alpha_kernel, cl_map_complex, compose, dissipation_kernel, drive_vector, evolution_map, inverse, overdamped_mu,
    KernelSet,
};
use chordprop::{MapKind, Mat2};
use num_complex::Complex64;
use proptest::prelude::*;

fn kind_and_rate() -> impl Strategy<Value = (MapKind, f64)> {
    prop_oneof![
        (0.0..2.0f64).prop_map(|r| (MapKind::FiniteTemp, r)),
        (0.01..1.95f64).prop_map(|r| (MapKind::ClUnder, r)),
        (2.05..6.0f64).prop_map(|r| (MapKind::ClOver, r)),
    ]
}

fn max_abs(m: &Mat2) -> f64 {
    m.iter().fold(0.0f64, |a, x| a.max(x.abs()))
}

fn flatten(k: &KernelSet) -> Vec<f64> {
    let e = |m: &Mat2| vec![m[(0, 0)], m[(0, 1)], m[(1, 1)]];
    match k {
        KernelSet::Alpha(a) | KernelSet::Underdamped(a) => e(a.entries()),
        KernelSet::Overdamped { b, c } => [e(b.entries()), e(c.entries())].concat(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn group_and_inverse_laws((kind, rate) in kind_and_rate(), s1 in -5.0..5.0f64, s2 in -5.0..5.0f64) {
        let a = evolution_map(kind, rate, s1).unwrap();
        let b = evolution_map(kind, rate, s2).unwrap();
        let ab = compose(&a, &b).unwrap();
        let direct = evolution_map(kind, rate, s1 + s2).unwrap();
        // rounding in a product is bounded by the product of the factor norms
        let scale = max_abs(a.entries()) * max_abs(b.entries());
        prop_assert!(max_abs(&(ab.entries() - direct.entries())) <= 1e-11 * scale.max(1.0));
        prop_assert!((ab.sigma() - (s1 + s2)).abs() < 1e-15);

        let inv = inverse(&a);
        let back = compose(&a, &inv).unwrap();
        let cond = max_abs(a.entries()) * max_abs(inv.entries());
        prop_assert!(max_abs(&(back.entries() - Mat2::identity())) <= 1e-11 * cond.max(1.0));
        let det = a.determinant();
        let spread = max_abs(a.entries()).powi(2).max(a.expected_determinant());
        prop_assert!((det - a.expected_determinant()).abs() <= 1e-12 * spread);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn columns_solve_the_parametric_odes((kind, rate) in kind_and_rate(), sigma in 0.0..5.0f64) {
        let closed = evolution_map(kind, rate, sigma).unwrap();
        let rk4 = flow_map(kind, rate, sigma, 1e-4);
        let scale = max_abs(closed.entries()).max(1.0);
        prop_assert!(max_abs(&(closed.entries() - rk4)) <= 1e-8 * scale);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn kernels_match_quadrature((kind, rate) in kind_and_rate(), sigma in 0.0..10.0f64) {
        let cfg = OracleConfig::default();
        let closed = flatten(&dissipation_kernel(kind, rate, sigma).unwrap());
        let quad = flatten(&kernel_quadrature(kind, rate, sigma, &cfg).unwrap());
        for (c, q) in closed.iter().zip(&quad) {
            prop_assert!((c - q).abs() <= 1e-10, "{kind:?} rate={rate} sigma={sigma}: {c} vs {q}");
        }
    }

    #[test]
    fn drives_match_quadrature(
        under in any::<bool>(),
        rate in 0.01..1.9f64,
        lambda in 0.0..2.0f64,
        nu in 0.1..2.0f64,
        tau in 0.0..20.0f64,
        sigma in 0.0..10.0f64,
    ) {
        let kind = if under { MapKind::ClUnder } else { MapKind::FiniteTemp };
        let cfg = OracleConfig::default();
        let closed = drive_vector(kind, rate, lambda, nu, tau, sigma).unwrap().components;
        let quad = drive_quadrature(kind, rate, lambda, nu, tau, sigma, &cfg).unwrap();
        prop_assert!((closed - quad).amax() <= 1e-10, "{closed:?} vs {quad:?}");
    }

    #[test]
    fn drive_is_linear_in_amplitude(
        rate in 0.01..1.9f64,
        lambda in 0.0..3.0f64,
        nu in 0.1..2.0f64,
        tau in 0.0..5.0f64,
        sigma in 0.0..5.0f64,
    ) {
        for kind in [MapKind::FiniteTemp, MapKind::ClUnder] {
            let unit = drive_vector(kind, rate, 1.0, nu, tau, sigma).unwrap().components;
            let scaled = drive_vector(kind, rate, lambda, nu, tau, sigma).unwrap().components;
            prop_assert!((scaled - unit * lambda).amax() <= 1e-14 * (1.0 + scaled.amax()));
        }
    }
}

#[test]
fn complex_frequency_reproduces_overdamped_map() {
    for (beta, sigma) in [(3.0, 0.2), (3.0, 1.7), (2.2, 4.0), (5.0, -0.8)] {
        let n = evolution_map(MapKind::ClOver, beta, sigma).unwrap();
        let omega = Complex64::new(0.0, overdamped_mu(beta));
        let m = cl_map_complex(beta, omega, sigma);
        for i in 0..2 {
            for j in 0..2 {
                let diff = (m[(i, j)] - Complex64::new(n.get(i, j), 0.0)).norm();
                assert!(diff <= 1e-10 * n.get(i, j).abs().max(1.0), "beta={beta} sigma={sigma}");
            }
        }
    }
}

#[test]
fn worked_map_examples() {
    let r = evolution_map(MapKind::FiniteTemp, 0.1, std::f64::consts::FRAC_PI_2).unwrap();
    let f = (0.05 * std::f64::consts::PI).exp();
    let expected = Mat2::new(0.0, f, -f, 0.0);
    assert!(max_abs(&(r.entries() - expected)) < 1e-14);

    let m = compose(
        &evolution_map(MapKind::ClUnder, 0.2, 0.7).unwrap(),
        &evolution_map(MapKind::ClUnder, 0.2, 0.3).unwrap(),
    )
    .unwrap();
    let one = evolution_map(MapKind::ClUnder, 0.2, 1.0).unwrap();
    assert!(max_abs(&(m.entries() - one.entries())) < 1e-12);

    let inv = inverse(&evolution_map(MapKind::FiniteTemp, 0.5, 1.0).unwrap());
    let minus = evolution_map(MapKind::FiniteTemp, 0.5, -1.0).unwrap();
    assert!(max_abs(&(inv.entries() - minus.entries())) < 1e-15);

    let n = evolution_map(MapKind::ClOver, 3.0, 0.2).unwrap();
    let prod = inverse(&n).entries() * n.entries();
    assert!(max_abs(&(prod - Mat2::identity())) < 1e-12);
}

#[test]
fn kernel_limits() {
    assert!((alpha_kernel(0.5, 1.0).unwrap() - (1.0 - (-1.0f64).exp())).abs() < 1e-15);
    assert!((alpha_kernel(0.5, 200.0).unwrap() - 1.0).abs() < 1e-15);
    let KernelSet::Underdamped(a) = dissipation_kernel(MapKind::ClUnder, 0.2, 50.0).unwrap() else {
        panic!("expected kernel A");
    };
    // residual transient at σ = 50 is of order e^{−βσ}/β ≈ 2e-4
    assert!((a.entries() - Mat2::identity() * 2.5).amax() < 1e-3);
    let KernelSet::Underdamped(a) = dissipation_kernel(MapKind::ClUnder, 0.2, 400.0).unwrap() else {
        panic!("expected kernel A");
    };
    assert!((a.entries() - Mat2::identity() * 2.5).amax() < 1e-8);
}
