//! Gaussian chord functions `w(r) = exp(−½ rᵀ Σ r + i μᵀ r)`.
//!
//! `Σ` coincides with the phase-space covariance matrix of the state
//! (`Σ11 = ⟨q²⟩ − ⟨q⟩²`) and `μ = (⟨q⟩, ⟨p⟩)`. Normalization `w(0) = 1`
//! is structural.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::phase_maps::{Mat2, Vec2};

/// Slack on the uncertainty bound `det Σ ≥ 1/4`.
pub const PURITY_TOLERANCE: f64 = 1e-9;

/// A chord-space point: `k` pairs with position, `s` with momentum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChordVector {
    pub k: f64,
    pub s: f64,
}

impl ChordVector {
    pub fn new(k: f64, s: f64) -> Self {
        Self { k, s }
    }

    pub fn origin() -> Self {
        Self { k: 0.0, s: 0.0 }
    }

    pub fn as_vec(&self) -> Vec2 {
        Vec2::new(self.k, self.s)
    }

    pub fn from_vec(v: &Vec2) -> Self {
        Self { k: v[0], s: v[1] }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianChordState {
    sigma_mat: Mat2,
    mu: Vec2,
}

/// Which quadrature a marginal is taken along.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    Position,
    Momentum,
}

/// One-dimensional Gaussian distribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Marginal {
    pub mean: f64,
    pub variance: f64,
}

impl Marginal {
    pub fn density(&self, x: f64) -> f64 {
        let d = x - self.mean;
        (-0.5 * d * d / self.variance).exp() / (2.0 * PI * self.variance).sqrt()
    }
}

/// Wigner function of a Gaussian chord state, written as
///
/// ```text
/// W(q, p) = N · exp(−[ξ1 (p−p0)² + ξ2 (p−p0)(q−x0) + ξ3 (q−x0)²] / (4 ξ1 ξ3 − ξ2²))
/// ```
///
/// with `N` fixed so that `∫∫ W dq dp = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WignerGaussian {
    pub widths: [f64; 3],
    pub center: (f64, f64),
}

impl WignerGaussian {
    fn discriminant(&self) -> f64 {
        let [x1, x2, x3] = self.widths;
        4.0 * x1 * x3 - x2 * x2
    }

    pub fn normalization(&self) -> f64 {
        // det Σ = discriminant since Σ11 = 2ξ1, Σ22 = 2ξ3, Σ12 = −ξ2
        1.0 / (2.0 * PI * self.discriminant().sqrt())
    }

    pub fn density(&self, q: f64, p: f64) -> f64 {
        let [x1, x2, x3] = self.widths;
        let dq = q - self.center.0;
        let dp = p - self.center.1;
        let quad = x1 * dp * dp + x2 * dp * dq + x3 * dq * dq;
        self.normalization() * (-quad / self.discriminant()).exp()
    }

    /// Phase-space covariance `[[⟨δq²⟩, ⟨δq δp⟩], [⟨δq δp⟩, ⟨δp²⟩]]`.
    pub fn covariance(&self) -> Mat2 {
        let [x1, x2, x3] = self.widths;
        Mat2::new(2.0 * x1, -x2, -x2, 2.0 * x3)
    }
}

impl GaussianChordState {
    /// Build a state from its covariance and mean.
    ///
    /// Rejects asymmetric or non-positive-definite `Σ`. States below the
    /// uncertainty bound are accepted with a logged warning since some
    /// models drive states there.
    pub fn new(sigma_mat: Mat2, mu: Vec2) -> Result<Self> {
        if sigma_mat.iter().chain(mu.iter()).any(|x| !x.is_finite()) {
            return Err(Error::InvalidParameter("state entries must be finite".into()));
        }
        if sigma_mat[(0, 1)] != sigma_mat[(1, 0)] {
            return Err(Error::InvalidParameter("covariance must be symmetric".into()));
        }
        let state = Self { sigma_mat, mu };
        if !state.is_positive_definite() {
            return Err(Error::NotPositiveDefinite);
        }
        if !state.satisfies_uncertainty() {
            log::warn!("state violates the uncertainty bound: det = {} < 1/4", state.sigma_mat.determinant());
        }
        Ok(state)
    }

    /// Construct without any checks; used internally by the propagators,
    /// whose outputs may leave the physical set.
    pub(crate) fn from_parts(sigma_mat: Mat2, mu: Vec2) -> Self {
        let sym = 0.5 * (sigma_mat[(0, 1)] + sigma_mat[(1, 0)]);
        let mut s = sigma_mat;
        s[(0, 1)] = sym;
        s[(1, 0)] = sym;
        Self { sigma_mat: s, mu }
    }

    pub fn sigma_mat(&self) -> &Mat2 {
        &self.sigma_mat
    }

    pub fn mu(&self) -> &Vec2 {
        &self.mu
    }

    pub fn is_positive_definite(&self) -> bool {
        self.sigma_mat[(0, 0)] > 0.0 && self.sigma_mat.determinant() > 0.0
    }

    /// `det Σ ≥ 1/4` up to [`PURITY_TOLERANCE`].
    pub fn satisfies_uncertainty(&self) -> bool {
        self.sigma_mat.determinant() >= 0.25 - PURITY_TOLERANCE
    }

    /// Purity `Tr ρ² = 1 / (2 √det Σ)`.
    pub fn purity(&self) -> f64 {
        0.5 / self.sigma_mat.determinant().sqrt()
    }
}

/// Coherent state centred at `(x0, p0)`.
pub fn coherent_state(x0: f64, p0: f64) -> GaussianChordState {
    GaussianChordState::from_parts(Mat2::identity() * 0.5, Vec2::new(x0, p0))
}

/// Isotropic Gaussian with variance `v` in both quadratures and zero mean.
pub fn thermal_state(variance: f64) -> Result<GaussianChordState> {
    GaussianChordState::new(Mat2::identity() * variance, Vec2::zeros())
}

pub fn evaluate(state: &GaussianChordState, r: ChordVector) -> Complex64 {
    let v = r.as_vec();
    let quad = v.dot(&(state.sigma_mat * v));
    let phase = state.mu.dot(&v);
    Complex64::from_polar((-0.5 * quad).exp(), phase)
}

/// Mean energy `½ tr Σ + ½ |μ|²`.
pub fn energy(state: &GaussianChordState) -> f64 {
    0.5 * state.sigma_mat.trace() + 0.5 * state.mu.norm_squared()
}

pub fn to_wigner(state: &GaussianChordState) -> Result<WignerGaussian> {
    if !state.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    let s = &state.sigma_mat;
    Ok(WignerGaussian { widths: [0.5 * s[(0, 0)], -s[(0, 1)], 0.5 * s[(1, 1)]], center: (state.mu[0], state.mu[1]) })
}

pub fn marginal(state: &GaussianChordState, axis: Axis) -> Marginal {
    let i = match axis {
        Axis::Position => 0,
        Axis::Momentum => 1,
    };
    Marginal { mean: state.mu[i], variance: state.sigma_mat[(i, i)] }
}
