//! Closed-form propagators for the open quantum harmonic oscillator in the
//! chord (Fourier-transformed Wigner) representation.
//!
//! A Gaussian chord function `w(r) = exp(−½ rᵀΣr + iμᵀr)` stays Gaussian
//! under every model here, so propagation reduces to
//!
//! ```text
//! Σ' = Lᵀ Σ L + 2K,     μ' = Lᵀ μ − d
//! ```
//!
//! with `L` the inverse-time evolution map, `K` a dissipative kernel and `d`
//! a drive vector. See [`models::propagate`].

// `!(x >= 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod chord_state;
pub mod error;
pub mod models;
pub mod oracle;
pub mod phase_maps;

pub use chord_state::{
    coherent_state, energy, evaluate, marginal, thermal_state, to_wigner, Axis, ChordVector, GaussianChordState,
    Marginal, WignerGaussian,
};
pub use error::{Error, Result};
pub use models::{
    closed_form_energy, propagate, propagate_pointwise, stationary_state, Drive, ModelParams, OverdampedRegime, Variant,
};
pub use oracle::OracleConfig;
pub use phase_maps::{EvolutionMap, MapKind, Mat2, Vec2};
