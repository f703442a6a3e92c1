//! Brute-force reference computations that share no code path with the
//! closed forms: RK4 along the characteristics of the chord PDEs, adaptive
//! quadrature of the kernel and drive integrals, and RK4 integration of the
//! Lindblad equation in a truncated Fock basis.

mod characteristics;
mod fock;
mod quadrature;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use characteristics::{characteristics_value, characteristics_value_checked, chord_pde, flow_map, ChordPde};
pub use fock::{fock_energy_trace, FockTrace, LindbladOperator};
pub use quadrature::{drive_quadrature, integrate, kernel_quadrature};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OracleConfig {
    pub rk4_step: f64,
    pub quad_tol: f64,
    pub fock_dim: usize,
    pub fock_step: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self { rk4_step: 1e-4, quad_tol: 1e-12, fock_dim: 60, fock_step: 1e-4 }
    }
}

impl OracleConfig {
    pub fn validate(&self) -> Result<()> {
        let positive = |x: f64| x.is_finite() && x > 0.0;
        if !positive(self.rk4_step) || !positive(self.quad_tol) || !positive(self.fock_step) {
            return Err(Error::InvalidParameter(format!("oracle steps and tolerances must be > 0: {self:?}")));
        }
        if self.fock_dim < 10 {
            return Err(Error::InvalidParameter(format!("fock_dim must be at least 10, got {}", self.fock_dim)));
        }
        Ok(())
    }
}
