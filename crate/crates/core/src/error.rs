use thiserror::Error;

/// Failures raised by the propagators and oracles.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Parameters fall outside the damping regime a model is defined for.
    #[error("regime violation: {0}")]
    Regime(String),

    /// `beta == 2` sits between the underdamped and overdamped closed forms.
    #[error("critical damping (beta = 2) is not supported")]
    CriticalDamping,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Two maps with different kinds or rates cannot be composed.
    #[error("incompatible maps: {0}")]
    Incompatible(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("covariance matrix is not positive definite")]
    NotPositiveDefinite,

    /// An oracle could not reach the requested accuracy.
    #[error("oracle failed to converge: {0}")]
    NonConvergence(String),
}

impl Error {
    /// True for errors that come from the physics regime rather than from
    /// malformed input.
    pub fn is_regime(&self) -> bool {
        matches!(self, Error::Regime(_) | Error::CriticalDamping | Error::Unsupported(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
