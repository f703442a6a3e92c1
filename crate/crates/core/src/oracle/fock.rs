use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::models::{ModelParams, Variant};

use super::OracleConfig;

/// Populations of the two highest Fock levels above this flag the run.
pub const LEAKAGE_THRESHOLD: f64 = 1e-8;

/// Operator with a single non-zero band: `op[i][i + offset] = coeff[i]`.
#[derive(Debug, Clone)]
struct BandOp {
    offset: isize,
    coeff: Vec<f64>,
}

impl BandOp {
    fn annihilation(dim: usize) -> Self {
        let coeff = (0..dim).map(|i| if i + 1 < dim { ((i + 1) as f64).sqrt() } else { 0.0 }).collect();
        Self { offset: 1, coeff }
    }

    fn creation(dim: usize) -> Self {
        Self { offset: -1, coeff: (0..dim).map(|i| (i as f64).sqrt()).collect() }
    }

    fn identity(dim: usize) -> Self {
        Self { offset: 0, coeff: vec![1.0; dim] }
    }

    fn dim(&self) -> usize {
        self.coeff.len()
    }

    fn at(&self, i: isize) -> f64 {
        if i < 0 || i as usize >= self.dim() {
            0.0
        } else {
            self.coeff[i as usize]
        }
    }

    fn mul(&self, rhs: &BandOp) -> BandOp {
        let coeff = (0..self.dim() as isize).map(|i| self.coeff[i as usize] * rhs.at(i + self.offset)).collect();
        BandOp { offset: self.offset + rhs.offset, coeff }
    }

    fn shifted(&self, c: f64) -> BandOp {
        assert_eq!(self.offset, 0);
        BandOp { offset: 0, coeff: self.coeff.iter().map(|x| x + c).collect() }
    }
}

/// `out[m][n] += coeff[m][n] · ρ[m + dm][n + dn]`.
#[derive(Debug, Clone)]
struct ShiftTerm {
    dm: isize,
    dn: isize,
    coeff: Vec<Complex64>,
}

/// Sparse Lindblad generator acting on row-major `dim × dim` matrices.
#[derive(Debug, Clone)]
pub struct LindbladOperator {
    dim: usize,
    terms: Vec<ShiftTerm>,
}

impl LindbladOperator {
    fn empty(dim: usize) -> Self {
        Self { dim, terms: Vec::new() }
    }

    /// Add `c · X ρ Y`.
    fn add_sandwich(&mut self, c: Complex64, x: &BandOp, y: &BandOp) {
        let n = self.dim as isize;
        let (dm, dn) = (x.offset, -y.offset);
        let idx = match self.terms.iter().position(|t| t.dm == dm && t.dn == dn) {
            Some(i) => i,
            None => {
                self.terms.push(ShiftTerm { dm, dn, coeff: vec![Complex64::new(0.0, 0.0); self.dim * self.dim] });
                self.terms.len() - 1
            }
        };
        let term = &mut self.terms[idx];
        for m in 0..n {
            for col in 0..n {
                let (sm, sn) = (m + dm, col + dn);
                if sm < 0 || sm >= n || sn < 0 || sn >= n {
                    continue;
                }
                // Y[j][col] is non-zero for j = col − y.offset
                let v = x.coeff[m as usize] * y.at(sn);
                term.coeff[(m * n + col) as usize] += c * v;
            }
        }
    }

    /// Thermal-bath generator `−i[H, ρ] + L[ρ]` with `H = a†a + ½`.
    pub fn thermal(dim: usize, gamma: f64, nbar: f64) -> Self {
        let a = BandOp::annihilation(dim);
        let ad = BandOp::creation(dim);
        let id = BandOp::identity(dim);
        let num = ad.mul(&a);
        let anti = a.mul(&ad);
        let h = num.shifted(0.5);
        let i = Complex64::i();
        let mut op = Self::empty(dim);
        op.add_sandwich(-i, &h, &id);
        op.add_sandwich(i, &id, &h);
        let down = Complex64::new(gamma * (1.0 + nbar), 0.0);
        op.add_sandwich(-down, &num, &id);
        op.add_sandwich(down * 2.0, &a, &ad);
        op.add_sandwich(-down, &id, &num);
        let up = Complex64::new(gamma * nbar, 0.0);
        op.add_sandwich(-up, &anti, &id);
        op.add_sandwich(up * 2.0, &ad, &a);
        op.add_sandwich(-up, &id, &anti);
        op
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// True when every term maps the upper triangle onto itself, so a
    /// Hermitian state can be evolved through its upper triangle alone.
    fn phase_covariant(&self) -> bool {
        self.terms.iter().all(|t| t.dm == t.dn)
    }

    fn apply(&self, rho: &[Complex64], out: &mut [Complex64], upper_only: bool) {
        let n = self.dim as isize;
        out.iter_mut().for_each(|x| *x = Complex64::new(0.0, 0.0));
        for t in &self.terms {
            let m_lo = 0.max(-t.dm);
            let m_hi = n.min(n - t.dm);
            let c_lo = 0.max(-t.dn);
            let c_hi = n.min(n - t.dn);
            for m in m_lo..m_hi {
                let start = if upper_only { c_lo.max(m) } else { c_lo };
                if start >= c_hi {
                    continue;
                }
                let row = (m * n) as usize;
                let src = ((m + t.dm) * n + t.dn + start) as usize;
                let len = (c_hi - start) as usize;
                let dst = row + start as usize;
                let out_row = &mut out[dst..dst + len];
                let coeff = &t.coeff[dst..dst + len];
                let source = &rho[src..src + len];
                for ((o, c), r) in out_row.iter_mut().zip(coeff).zip(source) {
                    *o += c * r;
                }
            }
        }
    }
}

/// Energies from the Fock-basis integration plus its health diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct FockTrace {
    pub times: Vec<f64>,
    pub energies: Vec<f64>,
    pub max_trace_error: f64,
    pub min_eigenvalue: f64,
    /// Largest population seen in the two highest levels.
    pub leakage: f64,
    pub reliable: bool,
}

fn coherent_amplitudes(dim: usize, x0: f64, p0: f64) -> Vec<Complex64> {
    let alpha = Complex64::new(x0, p0) / std::f64::consts::SQRT_2;
    let mut c = Vec::with_capacity(dim);
    let mut cur = Complex64::new((-0.5 * alpha.norm_sqr()).exp(), 0.0);
    for n in 0..dim {
        c.push(cur);
        cur = cur * alpha / ((n + 1) as f64).sqrt();
    }
    c
}

/// Index ranges of the stored part of each row.
fn rows(dim: usize, upper_only: bool) -> impl Iterator<Item = (usize, usize)> {
    (0..dim).map(move |m| (m * dim + if upper_only { m } else { 0 }, (m + 1) * dim))
}

/// `dst = x + c·y`.
fn axpy(dst: &mut [Complex64], x: &[Complex64], y: &[Complex64], c: f64) {
    for (d, (a, b)) in dst.iter_mut().zip(x.iter().zip(y)) {
        *d = a + b * c;
    }
}

fn full_matrix(rho: &[Complex64], dim: usize, upper_only: bool) -> DMatrix<Complex64> {
    DMatrix::from_fn(dim, dim, |m, n| if upper_only && n < m { rho[n * dim + m].conj() } else { rho[m * dim + n] })
}

/// Integrate the thermal Lindblad equation from a coherent state and record
/// `tr(Hρ)` at each time of `sigma_grid`.
pub fn fock_energy_trace(
    params: &ModelParams,
    x0: f64,
    p0: f64,
    sigma_grid: &[f64],
    cfg: &OracleConfig,
) -> Result<FockTrace> {
    cfg.validate()?;
    params.validate()?;
    if !matches!(params.variant, Variant::FiniteTemp | Variant::ZeroTemp) {
        return Err(Error::Unsupported(format!("Fock oracle covers the optical bath only, not {:?}", params.variant)));
    }
    if sigma_grid.iter().any(|t| !(*t >= 0.0)) || sigma_grid.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::InvalidParameter("sigma grid must be sorted and non-negative".into()));
    }
    let dim = cfg.fock_dim;
    let op = LindbladOperator::thermal(dim, params.gamma, params.nbar());
    let upper = op.phase_covariant();

    let amps = coherent_amplitudes(dim, x0, p0);
    let mut rho: Vec<Complex64> = (0..dim * dim).map(|i| amps[i / dim] * amps[i % dim].conj()).collect();
    let zero = Complex64::new(0.0, 0.0);
    let mut acc = vec![zero; dim * dim];
    let mut k = vec![zero; dim * dim];
    let mut stage = vec![zero; dim * dim];
    let initial_trace: f64 = (0..dim).map(|i| rho[i * dim + i].re).sum();

    let mut trace = FockTrace {
        times: Vec::with_capacity(sigma_grid.len()),
        energies: Vec::with_capacity(sigma_grid.len()),
        max_trace_error: 0.0,
        min_eigenvalue: f64::INFINITY,
        leakage: 0.0,
        reliable: true,
    };
    let mut t = 0.0;
    for &target in sigma_grid {
        let span = target - t;
        let steps = (span / cfg.fock_step).ceil() as usize;
        if steps > 0 {
            let h = span / steps as f64;
            for _ in 0..steps {
                op.apply(&rho, &mut k, upper);
                for (lo, hi) in rows(dim, upper) {
                    acc[lo..hi].copy_from_slice(&k[lo..hi]);
                    axpy(&mut stage[lo..hi], &rho[lo..hi], &k[lo..hi], 0.5 * h);
                }
                for (weight, frac) in [(2.0, 0.5), (2.0, 1.0), (1.0, 0.0)] {
                    op.apply(&stage, &mut k, upper);
                    for (lo, hi) in rows(dim, upper) {
                        for (a, kk) in acc[lo..hi].iter_mut().zip(&k[lo..hi]) {
                            *a += kk * weight;
                        }
                        if frac > 0.0 {
                            axpy(&mut stage[lo..hi], &rho[lo..hi], &k[lo..hi], frac * h);
                        }
                    }
                }
                for (lo, hi) in rows(dim, upper) {
                    for (r, a) in rho[lo..hi].iter_mut().zip(&acc[lo..hi]) {
                        *r += a * (h / 6.0);
                    }
                }
                if upper {
                    for i in 0..dim {
                        rho[i * dim + i].im = 0.0;
                    }
                } else {
                    for m in 0..dim {
                        rho[m * dim + m].im = 0.0;
                        for n in m + 1..dim {
                            let avg = 0.5 * (rho[m * dim + n] + rho[n * dim + m].conj());
                            rho[m * dim + n] = avg;
                            rho[n * dim + m] = avg.conj();
                        }
                    }
                }
            }
        }
        t = target;
        let pops: Vec<f64> = (0..dim).map(|i| rho[i * dim + i].re).collect();
        let tr: f64 = pops.iter().sum();
        let e: f64 = pops.iter().enumerate().map(|(n, p)| (n as f64 + 0.5) * p).sum();
        trace.max_trace_error = trace.max_trace_error.max((tr - initial_trace).abs());
        trace.leakage = trace.leakage.max(pops[dim - 1] + pops[dim - 2]);
        let eig = full_matrix(&rho, dim, upper).symmetric_eigenvalues();
        trace.min_eigenvalue = trace.min_eigenvalue.min(eig.min());
        trace.times.push(t);
        trace.energies.push(e);
    }
    trace.reliable = trace.leakage <= LEAKAGE_THRESHOLD;
    if !trace.reliable {
        log::warn!("Fock truncation at {dim} leaks {:.3e} into the top levels", trace.leakage);
    }
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn band_products() {
        let a = BandOp::annihilation(5);
        let ad = BandOp::creation(5);
        let num = ad.mul(&a);
        assert_eq!(num.offset, 0);
        for (i, v) in num.coeff.iter().enumerate() {
            assert!((v - i as f64).abs() < 1e-14);
        }
        let anti = a.mul(&ad);
        assert!((anti.coeff[2] - 3.0).abs() < 1e-14);
        assert_eq!(anti.coeff[4], 0.0);
    }

    #[test]
    fn generator_is_trace_free() {
        let op = LindbladOperator::thermal(12, 0.3, 0.7);
        let amps = coherent_amplitudes(12, 0.4, -0.2);
        let rho: Vec<Complex64> = (0..144).map(|i| amps[i / 12] * amps[i % 12].conj()).collect();
        let mut out = vec![Complex64::new(0.0, 0.0); 144];
        op.apply(&rho, &mut out, false);
        let tr: Complex64 = (0..12).map(|i| out[i * 12 + i]).sum();
        assert!(tr.norm() < 1e-13);
    }

    #[test]
    fn vacuum_is_dark_at_zero_temperature() {
        let p = ModelParams::zero_temp(0.2);
        let cfg = OracleConfig { fock_dim: 12, fock_step: 1e-2, ..OracleConfig::default() };
        let tr = fock_energy_trace(&p, 0.0, 0.0, &[0.0, 1.0, 5.0], &cfg).unwrap();
        for e in tr.energies {
            assert!((e - 0.5).abs() < 1e-14);
        }
        assert!(tr.reliable);
    }

    #[test]
    fn rejects_caldeira_leggett() {
        let p = ModelParams::cl_under(0.2, 1.0);
        assert!(matches!(
            fock_energy_trace(&p, 0.0, 0.0, &[1.0], &OracleConfig::default()),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn small_basis_is_flagged() {
        let p = ModelParams::finite_temp(0.5, 5.0);
        let cfg = OracleConfig { fock_dim: 10, fock_step: 1e-2, ..OracleConfig::default() };
        let tr = fock_energy_trace(&p, 0.0, 0.0, &[10.0], &cfg).unwrap();
        assert!(!tr.reliable);
    }
}
