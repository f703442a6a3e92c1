//! Drive-vector expressions written directly with the `Δ±` denominators, in
//! the form they are commonly quoted.
//!
//! These are kept only so that the validation suite can audit them against
//! the defining integrals. [`super::drive_vector`] is the authoritative route.
//! Only the second optical component agrees with quadrature; the others are
//! off by O(λ) and show up in the validation audit.

use num_complex::Complex64;

use super::map::underdamped_omega;
use super::Vec2;

fn quoted_pair(lambda: f64, nu: f64, t_end: f64, sigma: f64, decay: f64, w: f64, gamma: f64) -> (f64, f64) {
    let i = Complex64::i();
    let dp = Complex64::new(nu + w, -gamma);
    let dm = Complex64::new(nu - w, -gamma);
    let base = (-i * nu * t_end).exp();
    let em = dm * base * (i * (nu - w) * sigma).exp() / dm.norm_sqr();
    let ep = dp * base * (i * (nu + w) * sigma).exp() / dp.norm_sqr();
    let pm = dp * dm * base / (dp * dm).norm_sqr();
    let damp = (-decay * sigma).exp();
    let re = 0.5 * lambda / w * damp * (em.re + ep.re) - lambda * w * pm.re;
    let im = 0.5 * lambda / w * damp * (em.im + ep.im) - lambda * (Complex64::new(nu, gamma) * pm).im;
    (re, im)
}

/// Quoted `(η1, η2)` for the optical bath with damping `γ`.
pub fn finite_temp_quoted(gamma: f64, lambda: f64, nu: f64, tau: f64, sigma: f64) -> Vec2 {
    let (re, im) = quoted_pair(lambda, nu, tau + sigma, sigma, gamma, 1.0, gamma);
    Vec2::new(re, im)
}

/// Quoted `(ξ1, ξ2)` for the underdamped Caldeira-Leggett flow with rate `β`.
pub fn underdamped_quoted(beta: f64, lambda: f64, nu: f64, tau: f64, sigma: f64) -> Vec2 {
    let gamma = 0.5 * beta;
    let w = underdamped_omega(beta);
    let (re, im) = quoted_pair(lambda, nu, tau + sigma, sigma, gamma, w, gamma);
    Vec2::new(re, -gamma * re + im)
}
