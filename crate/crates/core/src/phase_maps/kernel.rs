use super::map::{check_regime, inverse_time_entries};
use super::{MapKind, Mat2};
use crate::error::{Error, Result};

/// Which dissipative integral a kernel holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KernelKind {
    /// `α(σ)·I` of the optical bath.
    AlphaIdentity,
    /// Momentum diffusion kernel of the underdamped flow.
    A,
    /// Momentum diffusion kernel of the overdamped flow.
    B,
    /// Mixed `k·s` kernel of the overdamped flow. Not sign-definite.
    C,
}

/// Symmetric 2×2 matrix `K` entering a chord exponent as `−rᵀ K r`
/// (before the model's prefactor is applied).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraticKernel {
    entries: Mat2,
    kind: KernelKind,
}

impl QuadraticKernel {
    pub(crate) fn new(kind: KernelKind, k11: f64, k12: f64, k22: f64) -> Self {
        Self { entries: Mat2::new(k11, k12, k12, k22), kind }
    }

    pub fn entries(&self) -> &Mat2 {
        &self.entries
    }

    pub fn kind(&self) -> KernelKind {
        self.kind
    }

    pub fn trace(&self) -> f64 {
        self.entries.trace()
    }
}

/// Kernels produced by one [`dissipation_kernel`] call.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KernelSet {
    Alpha(QuadraticKernel),
    Underdamped(QuadraticKernel),
    Overdamped { b: QuadraticKernel, c: QuadraticKernel },
}

/// `α(σ) = (1 − e^{−2γσ}) / (2γ)`, with the `γ → 0` limit `α = σ`.
pub fn alpha_kernel(gamma: f64, sigma: f64) -> Result<f64> {
    if !(sigma >= 0.0) || !sigma.is_finite() {
        return Err(Error::InvalidParameter(format!("alpha kernel needs a finite sigma >= 0, got {sigma}")));
    }
    if !(gamma >= 0.0) {
        return Err(Error::InvalidParameter(format!("gamma must be >= 0, got {gamma}")));
    }
    if gamma < 1e-12 {
        return Ok(sigma);
    }
    Ok(-(-2.0 * gamma * sigma).exp_m1() / (2.0 * gamma))
}

/// Closed-form dissipative kernels for `kind` at damping `rate` after `sigma`.
///
/// For the Caldeira-Leggett flows the entries are
/// `K_ij = ∫₀^σ f_i(−u) f_j(−u) du` where `(f_1, f_2)` are `(m21, m22)` for
/// the diffusion kernels A and B. The mixed kernel C integrates the product
/// `k(u)·s(u)`; its off-diagonal is half the `k s` coefficient so that
/// `rᵀ C r` reproduces the integral exactly.
pub fn dissipation_kernel(kind: MapKind, rate: f64, sigma: f64) -> Result<KernelSet> {
    check_regime(kind, rate)?;
    if !(sigma >= 0.0) || !sigma.is_finite() {
        return Err(Error::InvalidParameter(format!("kernels need a finite sigma >= 0, got {sigma}")));
    }
    if kind == MapKind::FiniteTemp {
        let a = alpha_kernel(rate, sigma)?;
        return Ok(KernelSet::Alpha(QuadraticKernel::new(KernelKind::AlphaIdentity, a, 0.0, a)));
    }
    let (mode, [m11, m12, m21, m22]) = inverse_time_entries(kind, rate);
    let int = |f, g| mode.product_integral(f, g, sigma);
    let diff = (int(m21, m21), int(m21, m22), int(m22, m22));
    if kind == MapKind::ClUnder {
        return Ok(KernelSet::Underdamped(QuadraticKernel::new(KernelKind::A, diff.0, diff.1, diff.2)));
    }
    let b = QuadraticKernel::new(KernelKind::B, diff.0, diff.1, diff.2);
    let c = QuadraticKernel::new(KernelKind::C, int(m11, m21), 0.5 * (int(m11, m22) + int(m12, m21)), int(m12, m22));
    Ok(KernelSet::Overdamped { b, c })
}
