use nalgebra::Matrix2;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{DampedEntry, DampedMode, Mat2, Vec2};
use crate::error::{Error, Result};

/// Which family of characteristic flow a map belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MapKind {
    /// Optical (Lindblad) bath at any temperature; rate is `γ`.
    FiniteTemp,
    /// Underdamped Caldeira-Leggett flow; rate is `β < 2`.
    ClUnder,
    /// Overdamped Caldeira-Leggett flow; rate is `β > 2`.
    ClOver,
}

/// A point-to-point map along the characteristics, `r(τ+σ) = map(σ) r(τ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvolutionMap {
    entries: Mat2,
    kind: MapKind,
    rate: f64,
    sigma: f64,
}

impl EvolutionMap {
    pub fn entries(&self) -> &Mat2 {
        &self.entries
    }

    pub fn kind(&self) -> MapKind {
        self.kind
    }

    pub fn rate(&self) -> f64 {
        self.rate
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn determinant(&self) -> f64 {
        self.entries.determinant()
    }

    /// Closed-form determinant: `e^{2γσ}` or `e^{βσ}`.
    pub fn expected_determinant(&self) -> f64 {
        match self.kind {
            MapKind::FiniteTemp => (2.0 * self.rate * self.sigma).exp(),
            MapKind::ClUnder | MapKind::ClOver => (self.rate * self.sigma).exp(),
        }
    }

    pub fn apply(&self, r: &Vec2) -> Vec2 {
        self.entries * r
    }

    /// Entry `(i, j)`, zero-based.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[(i, j)]
    }
}

/// `κ = √(1 + γ²)`: natural frequency of the second-order equation behind
/// the finite-temperature map. The map itself does not depend on it.
pub fn kappa(gamma: f64) -> f64 {
    (1.0 + gamma * gamma).sqrt()
}

/// `ω = √(1 − β²/4)` for the underdamped flow.
pub fn underdamped_omega(beta: f64) -> f64 {
    (1.0 - 0.25 * beta * beta).sqrt()
}

/// `μ = √(β²/4 − 1)` for the overdamped flow.
pub fn overdamped_mu(beta: f64) -> f64 {
    (0.25 * beta * beta - 1.0).sqrt()
}

pub(crate) fn check_regime(kind: MapKind, rate: f64) -> Result<()> {
    if !rate.is_finite() || rate < 0.0 {
        return Err(Error::InvalidParameter(format!("damping rate must be finite and non-negative, got {rate}")));
    }
    match kind {
        MapKind::FiniteTemp => Ok(()),
        _ if rate == 2.0 => Err(Error::CriticalDamping),
        MapKind::ClUnder if rate > 2.0 => {
            Err(Error::Regime(format!("underdamped flow requires beta < 2, got beta = {rate}")))
        }
        MapKind::ClOver if rate < 2.0 => {
            Err(Error::Regime(format!("overdamped flow requires beta > 2, got beta = {rate}")))
        }
        _ => Ok(()),
    }
}

/// Oscillatory mode of `map(−u)` and the coefficients of its four entries,
/// ordered `[m11, m12, m21, m22]`.
pub(crate) fn inverse_time_entries(kind: MapKind, rate: f64) -> (DampedMode, [DampedEntry; 4]) {
    let e = |p, q| DampedEntry { p, q };
    match kind {
        MapKind::FiniteTemp => (
            DampedMode { decay: rate, freq: 1.0, hyperbolic: false },
            [e(1.0, 0.0), e(0.0, -1.0), e(0.0, 1.0), e(1.0, 0.0)],
        ),
        MapKind::ClUnder | MapKind::ClOver => {
            let a = 0.5 * rate;
            let hyperbolic = kind == MapKind::ClOver;
            let w = if hyperbolic { overdamped_mu(rate) } else { underdamped_omega(rate) };
            (
                DampedMode { decay: a, freq: w, hyperbolic },
                [e(1.0, a / w), e(0.0, -1.0 / w), e(0.0, 1.0 / w), e(1.0, -a / w)],
            )
        }
    }
}

/// Build the evolution map of `kind` with damping `rate` over time `sigma`.
///
/// `rate` is `γ` for [`MapKind::FiniteTemp`] and `β` for the
/// Caldeira-Leggett kinds. Negative `sigma` is allowed and gives the inverse.
pub fn evolution_map(kind: MapKind, rate: f64, sigma: f64) -> Result<EvolutionMap> {
    check_regime(kind, rate)?;
    if !sigma.is_finite() {
        return Err(Error::InvalidParameter(format!("sigma must be finite, got {sigma}")));
    }
    let entries = match kind {
        MapKind::FiniteTemp => {
            let (s, c) = sigma.sin_cos();
            (rate * sigma).exp() * Matrix2::new(c, s, -s, c)
        }
        MapKind::ClUnder => {
            let w = underdamped_omega(rate);
            let (s, c) = (w * sigma).sin_cos();
            let h = 0.5 * rate / w;
            (0.5 * rate * sigma).exp() * Matrix2::new(c - h * s, s / w, -s / w, c + h * s)
        }
        MapKind::ClOver => {
            let mu = overdamped_mu(rate);
            let (s, c) = ((mu * sigma).sinh(), (mu * sigma).cosh());
            let h = 0.5 * rate / mu;
            (0.5 * rate * sigma).exp() * Matrix2::new(c - h * s, s / mu, -s / mu, c + h * s)
        }
    };
    Ok(EvolutionMap { entries, kind, rate, sigma })
}

/// Matrix product of two maps of the same kind and rate; times add.
pub fn compose(a: &EvolutionMap, b: &EvolutionMap) -> Result<EvolutionMap> {
    if a.kind != b.kind || a.rate != b.rate {
        return Err(Error::Incompatible(format!(
            "cannot compose {:?}(rate {}) with {:?}(rate {})",
            a.kind, a.rate, b.kind, b.rate
        )));
    }
    Ok(EvolutionMap { entries: a.entries * b.entries, kind: a.kind, rate: a.rate, sigma: a.sigma + b.sigma })
}

/// The map run backwards: `map(−σ)`.
pub fn inverse(a: &EvolutionMap) -> EvolutionMap {
    // kind and rate were validated when `a` was built
    evolution_map(a.kind, a.rate, -a.sigma).expect("validated map")
}

/// Caldeira-Leggett map evaluated with an arbitrary complex `ω`.
///
/// With `ω = iμ` this reproduces the overdamped map; with real `ω` the
/// underdamped one.
pub fn cl_map_complex(beta: f64, omega: Complex64, sigma: f64) -> Matrix2<Complex64> {
    let (s, c) = ((omega * sigma).sin(), (omega * sigma).cos());
    let h = 0.5 * beta / omega;
    let pre = Complex64::new((0.5 * beta * sigma).exp(), 0.0);
    Matrix2::new(c - h * s, s / omega, -s / omega, c + h * s) * pre
}
