use crate::error::{Error, Result};
use crate::phase_maps::{evolution_map, KernelKind, KernelSet, MapKind, QuadraticKernel, Vec2};

use super::OracleConfig;

const MAX_INTERVALS: usize = 20_000;

// 15-point Kronrod nodes on [0, 1] half-interval (symmetric), with the
// embedded 7-point Gauss weights.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

fn gauss_kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let x = h * XGK[j];
        let pair = f(c - x) + f(c + x);
        kronrod += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    (kronrod * h, ((kronrod - gauss) * h).abs())
}

/// Adaptive Gauss-Kronrod (7/15) integration of `f` over `[a, b]` to an
/// absolute error of `tol`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    let width = (b - a).abs();
    let mut stack = vec![(a, b)];
    let mut total = 0.0;
    let mut err_total = 0.0;
    let mut intervals = 0;
    while let Some((lo, hi)) = stack.pop() {
        intervals += 1;
        let (val, err) = gauss_kronrod(&f, lo, hi);
        let local_tol = tol * (hi - lo).abs() / width;
        if err <= local_tol || (hi - lo).abs() < 1e-14 * width {
            total += val;
            err_total += err;
            continue;
        }
        if intervals > MAX_INTERVALS {
            return Err(Error::NonConvergence(format!(
                "quadrature exceeded {MAX_INTERVALS} intervals; error estimate {:.3e}",
                err_total + err
            )));
        }
        let mid = 0.5 * (lo + hi);
        stack.push((mid, hi));
        stack.push((lo, mid));
    }
    Ok(total)
}

fn entries_at(kind: MapKind, rate: f64, u: f64) -> [f64; 4] {
    let m = evolution_map(kind, rate, -u).expect("validated regime");
    [m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1)]
}

/// Kernel integrals evaluated by quadrature of the map entries.
pub fn kernel_quadrature(kind: MapKind, rate: f64, sigma: f64, cfg: &OracleConfig) -> Result<KernelSet> {
    evolution_map(kind, rate, 0.0)?;
    if !(sigma >= 0.0) {
        return Err(Error::InvalidParameter(format!("sigma must be >= 0, got {sigma}")));
    }
    let tol = cfg.quad_tol;
    let q = |f: &dyn Fn([f64; 4]) -> f64| integrate(|u| f(entries_at(kind, rate, u)), 0.0, sigma, tol);
    match kind {
        MapKind::FiniteTemp => {
            let a = q(&|m| m[0] * m[0] + m[1] * m[1])?;
            Ok(KernelSet::Alpha(QuadraticKernel::new(KernelKind::AlphaIdentity, a, 0.0, a)))
        }
        MapKind::ClUnder | MapKind::ClOver => {
            let d11 = q(&|m| m[2] * m[2])?;
            let d12 = q(&|m| m[2] * m[3])?;
            let d22 = q(&|m| m[3] * m[3])?;
            if kind == MapKind::ClUnder {
                return Ok(KernelSet::Underdamped(QuadraticKernel::new(KernelKind::A, d11, d12, d22)));
            }
            let c11 = q(&|m| m[0] * m[2])?;
            let c12 = q(&|m| 0.5 * (m[0] * m[3] + m[1] * m[2]))?;
            let c22 = q(&|m| m[1] * m[3])?;
            Ok(KernelSet::Overdamped {
                b: QuadraticKernel::new(KernelKind::B, d11, d12, d22),
                c: QuadraticKernel::new(KernelKind::C, c11, c12, c22),
            })
        }
    }
}

/// Drive vector from its defining integral
/// `∫₀^σ λ cos(ν(τ+σ−u)) map_{2j}(−u) du`.
pub fn drive_quadrature(
    kind: MapKind,
    rate: f64,
    lambda: f64,
    nu: f64,
    tau: f64,
    sigma: f64,
    cfg: &OracleConfig,
) -> Result<Vec2> {
    evolution_map(kind, rate, 0.0)?;
    let t_end = tau + sigma;
    let force = |u: f64| lambda * (nu * (t_end - u)).cos();
    let v1 = integrate(|u| force(u) * entries_at(kind, rate, u)[2], 0.0, sigma, cfg.quad_tol)?;
    let v2 = integrate(|u| force(u) * entries_at(kind, rate, u)[3], 0.0, sigma, cfg.quad_tol)?;
    Ok(Vec2::new(v1, v2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_polynomials_and_exponentials() {
        let v = integrate(|x| x * x * x, 0.0, 2.0, 1e-13).unwrap();
        assert!((v - 4.0).abs() < 1e-13);
        let v = integrate(|x| (-x).exp(), 0.0, 30.0, 1e-13).unwrap();
        assert!((v + (-30f64).exp_m1()).abs() < 1e-13);
        let v = integrate(|x| (50.0 * x).sin(), 0.0, std::f64::consts::PI, 1e-12).unwrap();
        assert!(v.abs() < 1e-12);
    }

    #[test]
    fn alpha_by_quadrature() {
        let KernelSet::Alpha(a) = kernel_quadrature(MapKind::FiniteTemp, 0.5, 1.0, &OracleConfig::default()).unwrap()
        else {
            panic!()
        };
        assert!((a.entries()[(0, 0)] - 0.632_120_558_828_557_7).abs() < 1e-12);
    }

    #[test]
    fn overdamped_c_is_zero_at_origin() {
        let KernelSet::Overdamped { c, .. } =
            kernel_quadrature(MapKind::ClOver, 3.0, 0.0, &OracleConfig::default()).unwrap()
        else {
            panic!()
        };
        assert_eq!(c.entries().norm(), 0.0);
    }
}
