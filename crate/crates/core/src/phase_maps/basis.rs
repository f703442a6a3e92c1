//! Shared closed-form integrals for entries of the form
//! `e^{-a u} (p·c(w u) + q·s(w u))`, with `(c, s)` either `(cos, sin)` or
//! `(cosh, sinh)`.

use num_complex::Complex64;

/// Decay rate and frequency of the inverse-time map entries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct DampedMode {
    pub decay: f64,
    pub freq: f64,
    pub hyperbolic: bool,
}

/// Coefficients `(p, q)` of one map entry on the `(c, s)` basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct DampedEntry {
    pub p: f64,
    pub q: f64,
}

/// `∫₀^σ e^{x u} du` without cancellation for small `x σ`.
pub(crate) fn exp_integral(x: f64, sigma: f64) -> f64 {
    if x == 0.0 {
        sigma
    } else {
        (x * sigma).exp_m1() / x
    }
}

/// `∫₀^σ e^{z u} du` for complex `z`.
pub(crate) fn exp_integral_c(z: Complex64, sigma: f64) -> Complex64 {
    if z.re == 0.0 && z.im == 0.0 {
        return Complex64::new(sigma, 0.0);
    }
    let x = z.re * sigma;
    let y = z.im * sigma;
    let half = (0.5 * y).sin();
    // e^{x+iy} - 1 split so that neither part cancels.
    let num = Complex64::new(x.exp_m1() * y.cos() - 2.0 * half * half, x.exp() * y.sin());
    num / z
}

impl DampedMode {
    /// `(∫e^{-2au}, ∫e^{-2au} c(2wu), ∫e^{-2au} s(2wu))` over `[0, σ]`.
    fn doubled_integrals(&self, sigma: f64) -> (f64, f64, f64) {
        let a2 = 2.0 * self.decay;
        let w2 = 2.0 * self.freq;
        let i0 = exp_integral(-a2, sigma);
        if self.hyperbolic {
            let up = exp_integral(-a2 + w2, sigma);
            let down = exp_integral(-a2 - w2, sigma);
            (i0, 0.5 * (up + down), 0.5 * (up - down))
        } else {
            let z = exp_integral_c(Complex64::new(-a2, w2), sigma);
            (i0, z.re, z.im)
        }
    }

    /// `∫₀^σ f(u) g(u) du` for two entries of this mode.
    pub fn product_integral(&self, f: DampedEntry, g: DampedEntry, sigma: f64) -> f64 {
        let (i0, ic, is) = self.doubled_integrals(sigma);
        let (cc, cs, ss) = if self.hyperbolic {
            (0.5 * (ic + i0), 0.5 * is, 0.5 * (ic - i0))
        } else {
            (0.5 * (i0 + ic), 0.5 * is, 0.5 * (i0 - ic))
        };
        f.p * g.p * cc + (f.p * g.q + f.q * g.p) * cs + f.q * g.q * ss
    }

    /// `∫₀^σ cos(ν (T − u)) f(u) du` for a trigonometric mode.
    pub fn cosine_weighted_integral(&self, f: DampedEntry, nu: f64, t_end: f64, sigma: f64) -> f64 {
        debug_assert!(!self.hyperbolic);
        // f(u) = Re[(p - i q) e^{z u}] with z = -a + i w
        let z = Complex64::new(-self.decay, self.freq);
        let i = Complex64::i();
        let plus = (i * nu * t_end).exp() * exp_integral_c(z - i * nu, sigma);
        let minus = (-i * nu * t_end).exp() * exp_integral_c(z + i * nu, sigma);
        let g = 0.5 * (plus + minus);
        (Complex64::new(f.p, -f.q) * g).re
    }
}
