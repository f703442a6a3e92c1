use num_complex::Complex64;

use super::{ModelParams, Variant};
use crate::chord_state::{ChordVector, GaussianChordState};
use crate::error::{Error, Result};
use crate::phase_maps::{dissipation_kernel, drive_vector, evolution_map, KernelSet, Mat2, Vec2};

/// Everything needed to advance a chord function by `σ`:
///
/// ```text
/// w(r, τ+σ) = w(Lr, τ) · exp(−rᵀ K r − i d·r)
/// ```
///
/// with `L = map(−σ)`, `K` the scaled dissipative kernel and `d` the drive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Propagator {
    pub pullback: Mat2,
    pub kernel: Mat2,
    pub drive: Vec2,
}

impl Propagator {
    /// `exp(−rᵀ K r − i d·r)`.
    pub fn factor(&self, r: &Vec2) -> Complex64 {
        Complex64::from_polar((-r.dot(&(self.kernel * r))).exp(), -self.drive.dot(r))
    }

    pub fn apply(&self, state: &GaussianChordState) -> GaussianChordState {
        let l = &self.pullback;
        let sigma = l.transpose() * state.sigma_mat() * l + self.kernel * 2.0;
        let mu = l.transpose() * state.mu() - self.drive;
        GaussianChordState::from_parts(sigma, mu)
    }
}

fn check_times(tau: f64, sigma: f64) -> Result<()> {
    if !tau.is_finite() || !sigma.is_finite() || sigma < 0.0 {
        return Err(Error::InvalidParameter(format!("need finite tau and sigma >= 0, got tau={tau}, sigma={sigma}")));
    }
    Ok(())
}

/// Build the propagator of `params` from absolute time `tau` over `sigma`.
pub fn propagator(params: &ModelParams, tau: f64, sigma: f64) -> Result<Propagator> {
    params.validate()?;
    check_times(tau, sigma)?;
    let kind = params.variant.map_kind();
    let rate = params.map_rate();
    let pullback = *evolution_map(kind, rate, -sigma)?.entries();
    let kernels = dissipation_kernel(kind, rate, sigma)?;
    let d = params.temperature;
    let g = params.gamma;
    let kernel = match (params.variant, kernels) {
        (Variant::FiniteTemp | Variant::DrivenFt | Variant::ZeroTemp, KernelSet::Alpha(a)) => {
            a.entries() * (0.5 * params.gamma_plus())
        }
        (Variant::HighTemp, KernelSet::Alpha(a)) => a.entries() * (g * d),
        (Variant::ClUnder | Variant::DrivenCl, KernelSet::Underdamped(a)) => a.entries() * (d * params.beta()),
        (Variant::ClOver, KernelSet::Overdamped { b, c }) => {
            let co = params.overdamped_coefficients()?;
            b.entries() * (co.omega * params.beta()) + c.entries() * co.gamma_mixed
        }
        (v, k) => unreachable!("kernel {k:?} does not belong to {v:?}"),
    };
    let drive = match params.drive.filter(|_| params.variant.is_driven()) {
        Some(dr) => drive_vector(kind, rate, dr.lambda, dr.nu, tau, sigma)?.components,
        None => Vec2::zeros(),
    };
    Ok(Propagator { pullback, kernel, drive })
}

/// Advance a Gaussian state from absolute time `tau` to `tau + sigma`.
///
/// `tau` only matters for the driven variants.
pub fn propagate(state: &GaussianChordState, params: &ModelParams, tau: f64, sigma: f64) -> Result<GaussianChordState> {
    Ok(propagator(params, tau, sigma)?.apply(state))
}

/// Value at `r` of an arbitrary chord function `w0` propagated by `sigma`.
pub fn propagate_pointwise<F>(w0: F, params: &ModelParams, tau: f64, sigma: f64, r: ChordVector) -> Result<Complex64>
where
    F: Fn(ChordVector) -> Complex64,
{
    let p = propagator(params, tau, sigma)?;
    let v = r.as_vec();
    let pulled = ChordVector::from_vec(&(p.pullback * v));
    Ok(w0(pulled) * p.factor(&v))
}

/// Long-time fixed point of an undriven model.
///
/// The overdamped model relaxes to `diag(Ω + Γ, Ω) = diag(D + Λ, Ω)`: its
/// mixed term feeds `⟨q p⟩`, which the flow converts into extra position
/// variance.
pub fn stationary_state(params: &ModelParams) -> Result<GaussianChordState> {
    params.validate()?;
    let d = params.temperature;
    let sigma = match params.variant {
        Variant::FiniteTemp => Mat2::identity() * (params.nbar() + 0.5),
        Variant::ZeroTemp => Mat2::identity() * 0.5,
        Variant::HighTemp | Variant::ClUnder => Mat2::identity() * d,
        Variant::ClOver => {
            let co = params.overdamped_coefficients()?;
            Mat2::new(co.omega + co.gamma_mixed, 0.0, 0.0, co.omega)
        }
        Variant::DrivenFt | Variant::DrivenCl => {
            return Err(Error::Unsupported("driven models only reach quasi-stationary orbits".into()))
        }
    };
    Ok(GaussianChordState::from_parts(sigma, Vec2::zeros()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chord_state::{coherent_state, energy, evaluate};
    use crate::models::OverdampedRegime;
    use approx::assert_relative_eq;

    #[test]
    fn zero_temp_ground_state_is_fixed() {
        let g = coherent_state(0.0, 0.0);
        let p = ModelParams::zero_temp(0.3);
        for sigma in [0.0, 0.1, 1.0, 7.5, 100.0] {
            let s = propagate(&g, &p, 0.0, sigma).unwrap();
            assert_relative_eq!(*s.sigma_mat(), Mat2::identity() * 0.5, epsilon = 1e-15);
            assert_relative_eq!(energy(&s), 0.5, epsilon = 1e-15);
        }
    }

    #[test]
    fn finite_temp_thermalizes() {
        let p = ModelParams::finite_temp(0.1, 1.0);
        let s = propagate(&coherent_state(1.0, 0.0), &p, 0.0, 800.0).unwrap();
        let st = stationary_state(&p).unwrap();
        assert_relative_eq!(s.sigma_mat(), st.sigma_mat(), epsilon = 1e-12);
        assert!(s.mu().norm() < 1e-12);
        assert_relative_eq!(st.sigma_mat()[(0, 0)], 1.0 / (1f64.exp() - 1.0) + 0.5, epsilon = 1e-15);
    }

    #[test]
    fn stationary_forms() {
        assert_eq!(*stationary_state(&ModelParams::zero_temp(0.2)).unwrap().sigma_mat(), Mat2::identity() * 0.5);
        assert_eq!(*stationary_state(&ModelParams::cl_under(0.2, 5.0)).unwrap().sigma_mat(), Mat2::identity() * 5.0);
        assert!(stationary_state(&ModelParams::driven_ft(0.1, 1.0, 0.1, 1.0)).is_err());
    }

    #[test]
    fn overdamped_stationary_matches_long_time() {
        let p = ModelParams::cl_over(3.0, 5.0, OverdampedRegime::HighT, None);
        let s = propagate(&coherent_state(0.5, -1.0), &p, 0.0, 200.0).unwrap();
        let st = stationary_state(&p).unwrap();
        assert_relative_eq!(s.sigma_mat(), st.sigma_mat(), epsilon = 1e-10);
        assert_relative_eq!(st.sigma_mat()[(0, 0)], 5.0 + 1.0 / 60.0, epsilon = 1e-14);
    }

    #[test]
    fn pointwise_matches_gaussian_route() {
        let p = ModelParams::driven_cl(0.4, 2.0, 0.3, 0.8);
        let st = coherent_state(1.0, -0.5);
        let r = ChordVector::new(0.4, -0.9);
        let direct = evaluate(&propagate(&st, &p, 0.7, 1.9).unwrap(), r);
        let pointwise = propagate_pointwise(|x| evaluate(&st, x), &p, 0.7, 1.9, r).unwrap();
        assert!((direct - pointwise).norm() < 1e-14);
    }

    #[test]
    fn uniform_chord_keeps_normalization() {
        let p = ModelParams::finite_temp(0.1, 1.0);
        let v = propagate_pointwise(|_| Complex64::new(1.0, 0.0), &p, 0.0, 3.0, ChordVector::origin());
        assert_eq!(v.unwrap(), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn rejects_negative_duration() {
        let p = ModelParams::finite_temp(0.1, 1.0);
        assert!(propagate(&coherent_state(0.0, 0.0), &p, 0.0, -1.0).is_err());
    }
}
