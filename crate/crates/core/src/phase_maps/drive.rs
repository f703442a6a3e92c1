use super::map::{check_regime, inverse_time_entries, underdamped_omega};
use super::{MapKind, Vec2};
use crate::error::{Error, Result};

/// Phase shift picked up by the chord function under the periodic force
/// `λ cos(ν τ)`. The state mean moves by minus this vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DriveVector {
    pub components: Vec2,
    pub lambda: f64,
    pub nu: f64,
}

impl DriveVector {
    pub fn zero(lambda: f64, nu: f64) -> Self {
        Self { components: Vec2::zeros(), lambda, nu }
    }

    pub fn norm_squared(&self) -> f64 {
        self.components.norm_squared()
    }
}

/// Drive vector accumulated between absolute times `tau` and `tau + sigma`:
///
/// ```text
/// v_j = ∫₀^σ λ cos(ν (τ + σ − u)) · map_{2j}(−u) du,   j = 1, 2
/// ```
///
/// Evaluated in closed form through complex exponentials; with
/// `Δ± = ν ± w − i a` the result is the sum of one `1/Δ−` and one `1/Δ+`
/// partial fraction per component.
pub fn drive_vector(kind: MapKind, rate: f64, lambda: f64, nu: f64, tau: f64, sigma: f64) -> Result<DriveVector> {
    check_regime(kind, rate)?;
    if kind == MapKind::ClOver {
        return Err(Error::Unsupported("driven overdamped flow has no closed form".into()));
    }
    if !(lambda >= 0.0) || !lambda.is_finite() {
        return Err(Error::InvalidParameter(format!("drive amplitude must be >= 0, got {lambda}")));
    }
    if !nu.is_finite() || !tau.is_finite() || !(sigma >= 0.0) || !sigma.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "drive needs finite nu, tau and sigma >= 0 (nu={nu}, tau={tau}, sigma={sigma})"
        )));
    }
    let natural = match kind {
        MapKind::FiniteTemp => 1.0,
        _ => underdamped_omega(rate),
    };
    if rate == 0.0 && nu.abs() == natural {
        return Err(Error::Regime("undamped resonant drive grows without bound".into()));
    }
    if lambda == 0.0 || sigma == 0.0 {
        return Ok(DriveVector::zero(lambda, nu));
    }
    let (mode, [_, _, m21, m22]) = inverse_time_entries(kind, rate);
    let t_end = tau + sigma;
    let v1 = lambda * mode.cosine_weighted_integral(m21, nu, t_end, sigma);
    let v2 = lambda * mode.cosine_weighted_integral(m22, nu, t_end, sigma);
    Ok(DriveVector { components: Vec2::new(v1, v2), lambda, nu })
}
