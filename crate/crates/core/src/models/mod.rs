//! Dissipation models of the oscillator and their closed-form propagators.

mod energy;
mod propagate;

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::phase_maps::MapKind;

pub use energy::closed_form_energy;
pub use propagate::{propagate, propagate_pointwise, propagator, stationary_state, Propagator};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    FiniteTemp,
    ZeroTemp,
    HighTemp,
    #[serde(rename = "CLUnder")]
    ClUnder,
    #[serde(rename = "CLOver")]
    ClOver,
    #[serde(rename = "DrivenFT")]
    DrivenFt,
    #[serde(rename = "DrivenCL")]
    DrivenCl,
}

impl Variant {
    pub const ALL: [Variant; 7] = [
        Variant::FiniteTemp,
        Variant::ZeroTemp,
        Variant::HighTemp,
        Variant::ClUnder,
        Variant::ClOver,
        Variant::DrivenFt,
        Variant::DrivenCl,
    ];

    pub fn map_kind(self) -> MapKind {
        match self {
            Variant::FiniteTemp | Variant::ZeroTemp | Variant::HighTemp | Variant::DrivenFt => MapKind::FiniteTemp,
            Variant::ClUnder | Variant::DrivenCl => MapKind::ClUnder,
            Variant::ClOver => MapKind::ClOver,
        }
    }

    pub fn is_driven(self) -> bool {
        matches!(self, Variant::DrivenFt | Variant::DrivenCl)
    }
}

/// Asymptotic form used for the overdamped diffusion coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OverdampedRegime {
    HighT,
    LowT,
}

/// Periodic force `λ cos(ν τ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Drive {
    pub lambda: f64,
    pub nu: f64,
}

/// Diffusion coefficients of the overdamped model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OverdampedCoefficients {
    /// Momentum diffusion `Ω`.
    pub omega: f64,
    /// Quantum correction `Λ`.
    pub lambda: f64,
    /// Mixed-term coefficient `Γ = D + Λ − Ω`.
    pub gamma_mixed: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelParams {
    pub variant: Variant,
    /// Coupling rate `γ`; the Caldeira-Leggett rate is `β = 2γ`.
    pub gamma: f64,
    /// Dimensionless temperature `k_B T / (ħ ω₀)`.
    #[serde(rename = "D")]
    pub temperature: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega_c: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub od_regime: Option<OverdampedRegime>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub drive: Option<Drive>,
}

/// Planck occupancy `1/(e^{1/D} − 1)`, zero at `D = 0`.
pub fn planck_occupancy(d: f64) -> f64 {
    if d <= 0.0 {
        0.0
    } else {
        1.0 / (1.0 / d).exp_m1()
    }
}

impl ModelParams {
    fn base(variant: Variant, gamma: f64, temperature: f64) -> Self {
        Self { variant, gamma, temperature, omega_c: None, od_regime: None, drive: None }
    }

    pub fn finite_temp(gamma: f64, d: f64) -> Self {
        Self::base(Variant::FiniteTemp, gamma, d)
    }

    pub fn zero_temp(gamma: f64) -> Self {
        Self::base(Variant::ZeroTemp, gamma, 0.0)
    }

    pub fn high_temp(gamma: f64, d: f64) -> Self {
        Self::base(Variant::HighTemp, gamma, d)
    }

    /// Underdamped Caldeira-Leggett model with rate `β`.
    pub fn cl_under(beta: f64, d: f64) -> Self {
        Self::base(Variant::ClUnder, 0.5 * beta, d)
    }

    /// Overdamped model with rate `β`.
    pub fn cl_over(beta: f64, d: f64, regime: OverdampedRegime, omega_c: Option<f64>) -> Self {
        Self { od_regime: Some(regime), omega_c, ..Self::base(Variant::ClOver, 0.5 * beta, d) }
    }

    pub fn driven_ft(gamma: f64, d: f64, lambda: f64, nu: f64) -> Self {
        Self { drive: Some(Drive { lambda, nu }), ..Self::base(Variant::DrivenFt, gamma, d) }
    }

    pub fn driven_cl(beta: f64, d: f64, lambda: f64, nu: f64) -> Self {
        Self { drive: Some(Drive { lambda, nu }), ..Self::base(Variant::DrivenCl, 0.5 * beta, d) }
    }

    pub fn beta(&self) -> f64 {
        2.0 * self.gamma
    }

    /// Rate argument for [`crate::phase_maps::evolution_map`].
    pub fn map_rate(&self) -> f64 {
        match self.variant.map_kind() {
            MapKind::FiniteTemp => self.gamma,
            _ => self.beta(),
        }
    }

    pub fn nbar(&self) -> f64 {
        match self.variant {
            Variant::ZeroTemp => 0.0,
            _ => planck_occupancy(self.temperature),
        }
    }

    /// `γ₊ = 2γ(n̄ + ½)`.
    pub fn gamma_plus(&self) -> f64 {
        2.0 * self.gamma * (self.nbar() + 0.5)
    }

    pub fn overdamped_coefficients(&self) -> Result<OverdampedCoefficients> {
        let d = self.temperature;
        let beta = self.beta();
        let (omega, lambda) = match self.od_regime {
            Some(OverdampedRegime::HighT) => (d, 1.0 / (12.0 * d)),
            Some(OverdampedRegime::LowT) => {
                let wc = self
                    .omega_c
                    .ok_or_else(|| Error::InvalidParameter("low-temperature overdamped regime needs omega_c".into()))?;
                ((beta / PI) * (wc / beta).ln(), (beta / (2.0 * PI * d)).ln() / (beta * PI))
            }
            None => {
                return Err(Error::InvalidParameter("overdamped model needs od_regime".into()));
            }
        };
        Ok(OverdampedCoefficients { omega, lambda, gamma_mixed: d + lambda - omega })
    }

    /// Check every invariant of the parameter set.
    pub fn validate(&self) -> Result<()> {
        let v = self.variant;
        if !self.gamma.is_finite() || self.gamma <= 0.0 {
            return Err(Error::InvalidParameter(format!("gamma must be > 0, got {}", self.gamma)));
        }
        if !self.temperature.is_finite() || self.temperature < 0.0 {
            return Err(Error::InvalidParameter(format!("D must be >= 0, got {}", self.temperature)));
        }
        match v {
            Variant::ClUnder | Variant::DrivenCl if self.gamma == 1.0 => return Err(Error::CriticalDamping),
            Variant::ClUnder | Variant::DrivenCl if self.gamma > 1.0 => {
                return Err(Error::Regime(format!(
                    "underdamped Caldeira-Leggett model needs gamma < 1, got {}",
                    self.gamma
                )))
            }
            Variant::ClOver if self.gamma == 1.0 => return Err(Error::CriticalDamping),
            Variant::ClOver if self.gamma < 1.0 => {
                return Err(Error::Regime(format!("overdamped model needs gamma > 1, got {}", self.gamma)))
            }
            _ => {}
        }
        if v == Variant::ClOver {
            if self.drive.is_some() {
                return Err(Error::Unsupported("driven overdamped model".into()));
            }
            match self.od_regime {
                None => return Err(Error::InvalidParameter("CLOver needs od_regime".into())),
                Some(OverdampedRegime::HighT) if self.temperature <= 0.0 => {
                    return Err(Error::InvalidParameter("HighT overdamped regime needs D > 0".into()))
                }
                Some(OverdampedRegime::LowT) => {
                    if self.temperature <= 0.0 {
                        return Err(Error::InvalidParameter("LowT overdamped regime needs D > 0".into()));
                    }
                    match self.omega_c {
                        Some(wc) if wc.is_finite() && wc > 0.0 => {}
                        _ => return Err(Error::InvalidParameter("LowT overdamped regime needs omega_c > 0".into())),
                    }
                }
                _ => {}
            }
        } else if self.od_regime.is_some() || self.omega_c.is_some() {
            return Err(Error::InvalidParameter("od_regime and omega_c only apply to CLOver".into()));
        }
        match (v.is_driven(), self.drive) {
            (true, None) => {
                return Err(Error::InvalidParameter(format!("{v:?} needs a drive")));
            }
            (false, Some(_)) if v != Variant::ClOver => {
                return Err(Error::InvalidParameter(format!("{v:?} takes no drive")));
            }
            (true, Some(d)) if !d.lambda.is_finite() || d.lambda < 0.0 || !d.nu.is_finite() || d.nu < 0.0 => {
                return Err(Error::InvalidParameter(format!("drive needs lambda >= 0 and nu >= 0, got {d:?}")));
            }
            _ => {}
        }
        Ok(())
    }
}
