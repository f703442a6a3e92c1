use num_complex::Complex64;

use crate::chord_state::ChordVector;
use crate::error::{Error, Result};
use crate::models::{ModelParams, Variant};
use crate::phase_maps::{MapKind, Mat2, Vec2};

use super::OracleConfig;

/// First-order chord PDE
/// `∂τ w + (F r)·∇w = −(rᵀ Q r) w − i λ cos(ν τ) s w`,
/// read off directly from each model's master equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChordPde {
    pub drift: Mat2,
    pub diffusion: Mat2,
    pub lambda: f64,
    pub nu: f64,
}

fn drift_matrix(kind: MapKind, rate: f64) -> Mat2 {
    match kind {
        MapKind::FiniteTemp => Mat2::new(rate, 1.0, -1.0, rate),
        MapKind::ClUnder | MapKind::ClOver => Mat2::new(0.0, 1.0, -1.0, rate),
    }
}

pub fn chord_pde(params: &ModelParams) -> Result<ChordPde> {
    params.validate()?;
    let g = params.gamma;
    let beta = params.beta();
    let d = params.temperature;
    let diffusion = match params.variant {
        Variant::FiniteTemp | Variant::DrivenFt => Mat2::identity() * (0.5 * params.gamma_plus()),
        Variant::ZeroTemp => Mat2::identity() * (0.5 * g),
        Variant::HighTemp => Mat2::identity() * (g * d),
        Variant::ClUnder | Variant::DrivenCl => Mat2::new(0.0, 0.0, 0.0, d * beta),
        Variant::ClOver => {
            let co = params.overdamped_coefficients()?;
            Mat2::new(0.0, 0.5 * co.gamma_mixed, 0.5 * co.gamma_mixed, co.omega * beta)
        }
    };
    let (lambda, nu) = match params.drive.filter(|_| params.variant.is_driven()) {
        Some(dr) => (dr.lambda, dr.nu),
        None => (0.0, 0.0),
    };
    Ok(ChordPde { drift: drift_matrix(params.variant.map_kind(), params.map_rate()), diffusion, lambda, nu })
}

#[derive(Clone, Copy)]
struct Point {
    r: Vec2,
    log_w: Complex64,
}

impl ChordPde {
    fn rhs(&self, t: f64, p: &Point) -> Point {
        let r = p.r;
        let quad = r.dot(&(self.diffusion * r));
        let force = self.lambda * (self.nu * t).cos();
        Point { r: self.drift * r, log_w: Complex64::new(-quad, -force * r[1]) }
    }

    /// Pull `r` back from `t_end` to `t_end − sigma`; returns the foot of the
    /// characteristic and the integrated log-amplitude.
    fn pull_back(&self, r: Vec2, t_end: f64, sigma: f64, step: f64) -> (Vec2, Complex64) {
        let n = (sigma / step).ceil().max(1.0) as usize;
        let h = -sigma / n as f64;
        let mut t = t_end;
        let mut y = Point { r, log_w: Complex64::new(0.0, 0.0) };
        let axpy = |y: &Point, k: &Point, c: f64| Point { r: y.r + k.r * c, log_w: y.log_w + k.log_w * c };
        for _ in 0..n {
            let k1 = self.rhs(t, &y);
            let k2 = self.rhs(t + 0.5 * h, &axpy(&y, &k1, 0.5 * h));
            let k3 = self.rhs(t + 0.5 * h, &axpy(&y, &k2, 0.5 * h));
            let k4 = self.rhs(t + h, &axpy(&y, &k3, h));
            y.r += (k1.r + k2.r * 2.0 + k3.r * 2.0 + k4.r) * (h / 6.0);
            y.log_w += (k1.log_w + k2.log_w * 2.0 + k3.log_w * 2.0 + k4.log_w) * (h / 6.0);
            t += h;
        }
        // integrating backwards accumulated −∫ g dt
        (y.r, -y.log_w)
    }
}

fn check(sigma: f64, cfg: &OracleConfig) -> Result<()> {
    cfg.validate()?;
    if !(sigma >= 0.0) || !sigma.is_finite() {
        return Err(Error::InvalidParameter(format!("sigma must be >= 0, got {sigma}")));
    }
    Ok(())
}

/// Value of the propagated chord function at `r`, obtained by integrating
/// the characteristic ODEs backwards from `tau + sigma` to `tau` with RK4.
pub fn characteristics_value<F>(
    params: &ModelParams,
    w0: F,
    tau: f64,
    sigma: f64,
    r: ChordVector,
    cfg: &OracleConfig,
) -> Result<Complex64>
where
    F: Fn(ChordVector) -> Complex64,
{
    check(sigma, cfg)?;
    let pde = chord_pde(params)?;
    let (foot, log_w) = pde.pull_back(r.as_vec(), tau + sigma, sigma, cfg.rk4_step);
    Ok(w0(ChordVector::from_vec(&foot)) * log_w.exp())
}

/// As [`characteristics_value`], but also integrates at twice the step and
/// fails when the Richardson error estimate exceeds `tol`.
pub fn characteristics_value_checked<F>(
    params: &ModelParams,
    w0: F,
    tau: f64,
    sigma: f64,
    r: ChordVector,
    cfg: &OracleConfig,
    tol: f64,
) -> Result<(Complex64, f64)>
where
    F: Fn(ChordVector) -> Complex64,
{
    let fine = characteristics_value(params, &w0, tau, sigma, r, cfg)?;
    let coarse_cfg = OracleConfig { rk4_step: 2.0 * cfg.rk4_step, ..*cfg };
    let coarse = characteristics_value(params, &w0, tau, sigma, r, &coarse_cfg)?;
    let estimate = (fine - coarse).norm() / 15.0;
    if estimate > tol {
        return Err(Error::NonConvergence(format!(
            "rk4 step {} too large: error estimate {estimate:.3e} > {tol:.3e}",
            cfg.rk4_step
        )));
    }
    Ok((fine, estimate))
}

/// Flow of the characteristic drift `dr/dτ = F r` over `sigma`, as a matrix
/// whose columns are the images of the unit vectors.
pub fn flow_map(kind: MapKind, rate: f64, sigma: f64, step: f64) -> Mat2 {
    let pde = ChordPde { drift: drift_matrix(kind, rate), diffusion: Mat2::zeros(), lambda: 0.0, nu: 0.0 };
    // pull_back integrates towards earlier times; run it with −σ to go forward
    let n = (sigma.abs() / step).ceil().max(1.0) as usize;
    let h = sigma / n as f64;
    let mut out = Mat2::zeros();
    for col in 0..2 {
        let mut r = Vec2::zeros();
        r[col] = 1.0;
        for _ in 0..n {
            let k1 = pde.drift * r;
            let k2 = pde.drift * (r + k1 * (0.5 * h));
            let k3 = pde.drift * (r + k2 * (0.5 * h));
            let k4 = pde.drift * (r + k3 * h);
            r += (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
        }
        out.set_column(col, &r);
    }
    out
}
