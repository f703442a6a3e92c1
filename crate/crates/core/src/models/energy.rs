use super::{ModelParams, Variant};
use crate::error::Result;
use crate::phase_maps::{dissipation_kernel, drive_vector, overdamped_mu, underdamped_omega, KernelSet};

/// Energy transient in the closed forms derived for a coherent initial state
/// of energy `e0`.
///
/// The optical-bath forms are exact for any coherent state. The
/// Caldeira-Leggett forms scale the whole initial energy by the
/// Frobenius-norm factor of the map, which is exact only when the initial
/// mean is zero; the driven Caldeira-Leggett form is quoted with a
/// `e^{−2βσ}` decay. Both are reproduced as written so the validation suite
/// can report how far they sit from [`super::propagate`].
pub fn closed_form_energy(params: &ModelParams, e0: f64, tau: f64, sigma: f64) -> Result<f64> {
    params.validate()?;
    let g = params.gamma;
    let beta = params.beta();
    let d = params.temperature;
    let decay = (-2.0 * g * sigma).exp();
    let relax = -(-2.0 * g * sigma).exp_m1();
    let kernels = dissipation_kernel(params.variant.map_kind(), params.map_rate(), sigma)?;
    let drive_energy = || -> Result<f64> {
        let dr = params.drive.expect("validated driven params");
        let v = drive_vector(params.variant.map_kind(), params.map_rate(), dr.lambda, dr.nu, tau, sigma)?;
        Ok(0.5 * v.norm_squared())
    };
    let q = 0.25 * beta * beta;
    let cl_factor = || {
        let w = underdamped_omega(beta);
        let (s, c) = (w * sigma).sin_cos();
        c * c + (1.0 + q) / (1.0 - q) * s * s
    };
    let e = match (params.variant, kernels) {
        (Variant::FiniteTemp, _) => e0 * decay + (params.nbar() + 0.5) * relax,
        (Variant::ZeroTemp, _) => e0 * decay + 0.5 * relax,
        (Variant::HighTemp, _) => e0 * decay + d * relax,
        (Variant::DrivenFt, _) => e0 * decay + (params.nbar() + 0.5) * relax + drive_energy()?,
        (Variant::ClUnder, KernelSet::Underdamped(a)) => {
            e0 * (-beta * sigma).exp() * cl_factor() + d * beta * a.trace()
        }
        (Variant::DrivenCl, KernelSet::Underdamped(a)) => {
            e0 * (-2.0 * beta * sigma).exp() * cl_factor() + d * beta * a.trace() + drive_energy()?
        }
        (Variant::ClOver, KernelSet::Overdamped { b, c }) => {
            let co = params.overdamped_coefficients()?;
            let mu = overdamped_mu(beta);
            let (sh, ch) = ((mu * sigma).sinh(), (mu * sigma).cosh());
            let factor = ch * ch - (1.0 + q) / (1.0 - q) * sh * sh;
            e0 * (-beta * sigma).exp() * factor + co.omega * beta * b.trace() + co.gamma_mixed * c.trace()
        }
        (v, k) => unreachable!("kernel {k:?} does not belong to {v:?}"),
    };
    Ok(e)
}
