//! Scenario configuration files.
//!
//! ```json
//! {
//!   "model": {"variant": "FiniteTemp", "gamma": 0.1, "D": 1.0},
//!   "initial": [0.0, 0.0],
//!   "time_grid": {"t_start": 0.0, "t_end": 40.0, "n_points": 401},
//!   "outputs": ["energy", "trajectory"]
//! }
//! ```
//!
//! Unknown keys anywhere in the file are rejected.

use std::path::Path;

use chordprop::ModelParams;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Output {
    Energy,
    Trajectory,
    WignerGrid,
    Marginals,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TimeGrid {
    pub t_start: f64,
    pub t_end: f64,
    pub n_points: usize,
}

impl TimeGrid {
    /// Evenly spaced times; the last one is exactly `t_end`.
    pub fn points(&self) -> Vec<f64> {
        let n = self.n_points;
        let step = (self.t_end - self.t_start) / (n - 1) as f64;
        (0..n).map(|i| if i + 1 == n { self.t_end } else { self.t_start + i as f64 * step }).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WignerWindow {
    pub q_min: f64,
    pub q_max: f64,
    pub p_min: f64,
    pub p_max: f64,
    pub n_q: usize,
    pub n_p: usize,
}

impl WignerWindow {
    fn axis(lo: f64, hi: f64, n: usize) -> Vec<f64> {
        let step = (hi - lo) / (n - 1) as f64;
        (0..n).map(|i| if i + 1 == n { hi } else { lo + i as f64 * step }).collect()
    }

    pub fn q_axis(&self) -> Vec<f64> {
        Self::axis(self.q_min, self.q_max, self.n_q)
    }

    pub fn p_axis(&self) -> Vec<f64> {
        Self::axis(self.p_min, self.p_max, self.n_p)
    }
}

impl Default for WignerWindow {
    fn default() -> Self {
        Self { q_min: -6.0, q_max: 6.0, p_min: -6.0, p_max: 6.0, n_q: 121, n_p: 121 }
    }
}

fn default_outputs() -> Vec<Output> {
    vec![Output::Energy, Output::Trajectory]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    /// Free-form description, e.g. where unstated parameters were guessed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
    pub model: ModelParams,
    /// Centre `(x0, p0)` of the initial coherent state.
    pub initial: [f64; 2],
    pub time_grid: TimeGrid,
    #[serde(default = "default_outputs")]
    pub outputs: Vec<Output>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wigner: Option<WignerWindow>,
    /// Times at which Wigner grids are dumped; defaults to `t_end`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wigner_times: Option<Vec<f64>>,
    #[serde(default)]
    pub seed: u64,
}

impl Scenario {
    pub fn from_json(text: &str) -> CliResult<Self> {
        let s: Scenario = serde_json::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
        s.validate()?;
        Ok(s)
    }

    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::from_json(&text).map_err(|e| match e {
            CliError::Config(msg) => CliError::Config(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    pub fn wants(&self, o: Output) -> bool {
        self.outputs.contains(&o)
    }

    pub fn wigner_window(&self) -> WignerWindow {
        self.wigner.unwrap_or_default()
    }

    pub fn wigner_times(&self) -> Vec<f64> {
        self.wigner_times.clone().unwrap_or_else(|| vec![self.time_grid.t_end])
    }

    /// Structural checks, then the model's own parameter rules.
    pub fn validate(&self) -> CliResult<()> {
        let bad = |msg: String| Err(CliError::Config(msg));
        let g = &self.time_grid;
        if !self.initial.iter().all(|x| x.is_finite()) {
            return bad("initial must be finite".into());
        }
        if !g.t_start.is_finite() || !g.t_end.is_finite() || g.t_end <= g.t_start {
            return bad(format!("time_grid needs t_end > t_start, got {} .. {}", g.t_start, g.t_end));
        }
        if g.n_points < 2 {
            return bad(format!("time_grid.n_points must be >= 2, got {}", g.n_points));
        }
        if self.outputs.is_empty() {
            return bad("outputs must not be empty".into());
        }
        if let Some(w) = &self.wigner {
            let finite = [w.q_min, w.q_max, w.p_min, w.p_max].iter().all(|x| x.is_finite());
            if !finite || w.q_max <= w.q_min || w.p_max <= w.p_min {
                return bad(format!("wigner window is empty: {w:?}"));
            }
            if w.n_q < 8 || w.n_p < 8 {
                return bad(format!("wigner grid needs at least 8 points per axis, got {}x{}", w.n_q, w.n_p));
            }
        }
        if let Some(times) = &self.wigner_times {
            if let Some(t) = times.iter().find(|t| !(**t >= g.t_start && **t <= g.t_end)) {
                return bad(format!("wigner time {t} lies outside the time grid"));
            }
        }
        self.model.validate()?;
        Ok(())
    }
}
