//! Closed-form evolution matrices, dissipative quadratic kernels and driving
//! phase vectors.
//!
//! Every model in this crate moves chord-space points along the
//! characteristics of a damped oscillator. The three families of maps are
//!
//! * `FiniteTemp`: `e^{γσ}` times a rotation, valid for any `γ ≥ 0`;
//! * `ClUnder`: the Caldeira-Leggett map for `β < 2` with `ω = √(1 − β²/4)`;
//! * `ClOver`: the overdamped map for `β > 2` with `μ = √(β²/4 − 1)`.
//!
//! Kernels are the integrals of products of map entries evaluated at negative
//! times; drive vectors are the same entries weighted by the periodic force.

mod basis;
pub mod delta_forms;
mod drive;
mod kernel;
mod map;

pub use drive::{drive_vector, DriveVector};
pub use kernel::{alpha_kernel, dissipation_kernel, KernelKind, KernelSet, QuadraticKernel};
pub use map::{
    cl_map_complex, compose, evolution_map, inverse, kappa, overdamped_mu, underdamped_omega, EvolutionMap, MapKind,
};

pub(crate) use basis::{DampedEntry, DampedMode};

/// 2×2 real matrix used for maps and kernels.
pub type Mat2 = nalgebra::Matrix2<f64>;
/// Real 2-vector used for chord points, means and drive vectors.
pub type Vec2 = nalgebra::Vector2<f64>;
