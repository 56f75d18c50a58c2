use std::cmp::Ordering;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{cross_validate, mean_std, ConfigEcho, Method};
use crate::data::{kfold, Dataset};
use crate::error::{Error, Result};
use crate::param_gen::{GenConfig, Placement};
use crate::seed;

/// Default node counts searched.
pub const DEFAULT_M: [usize; 7] = [20, 50, 100, 200, 320, 500, 700];

/// Default lower slope-angle bounds searched, in degrees.
pub const DEFAULT_ALPHA_MIN: [f64; 10] = [0.0, 10.0, 20.0, 30.0, 40.0, 50.0, 60.0, 70.0, 80.0, 85.0];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub m_values: Vec<usize>,
    pub alpha_min_values: Vec<f64>,
    pub alpha_max_values: Vec<f64>,
    pub folds: usize,
    pub seed: u64,
    pub placement: Placement,
    pub standard_bound: f64,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            m_values: DEFAULT_M.to_vec(),
            alpha_min_values: DEFAULT_ALPHA_MIN.to_vec(),
            alpha_max_values: vec![90.0],
            folds: 10,
            seed: 42,
            placement: Placement::Hypercube,
            standard_bound: 1.0,
        }
    }
}

impl GridSpec {
    pub fn validate(&self) -> Result<()> {
        if self.m_values.is_empty() || self.alpha_min_values.is_empty() || self.alpha_max_values.is_empty() {
            return Err(Error::usage("grid axes must be nonempty"));
        }
        if self.folds < 2 {
            return Err(Error::usage(format!("need at least 2 folds, got {}", self.folds)));
        }
        for &lo in &self.alpha_min_values {
            for &hi in &self.alpha_max_values {
                if lo.partial_cmp(&hi) != Some(Ordering::Less) {
                    return Err(Error::usage(format!(
                        "grid pairs alpha_min={lo} with alpha_max={hi}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Grid cells `(m, alpha_min, alpha_max)` in evaluation order.
    pub fn cells(&self) -> Vec<(usize, f64, f64)> {
        let mut out = Vec::new();
        for &m in &self.m_values {
            for &lo in &self.alpha_min_values {
                for &hi in &self.alpha_max_values {
                    out.push((m, lo, hi));
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridCell {
    pub m: usize,
    pub alpha_min_deg: f64,
    pub alpha_max_deg: f64,
    pub rmse_mean: f64,
    pub fold_rmses: Vec<f64>,
}

impl GridCell {
    /// Orders by mean CV RMSE, then smaller `m`, then smaller angles.
    fn rank(&self, other: &Self) -> Ordering {
        self.rmse_mean
            .total_cmp(&other.rmse_mean)
            .then(self.m.cmp(&other.m))
            .then(self.alpha_min_deg.total_cmp(&other.alpha_min_deg))
            .then(self.alpha_max_deg.total_cmp(&other.alpha_max_deg))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridReport {
    pub experiment: String,
    pub method: Method,
    /// Best cell's hyperparameters, with the grid's base seed.
    pub config: ConfigEcho,
    pub folds: usize,
    pub cells: Vec<GridCell>,
    pub best: GridCell,
    /// Best cell's mean CV RMSE.
    pub rmse_mean: f64,
    /// Spread of the best cell's fold RMSEs.
    pub rmse_std: f64,
    pub wall_time_s: f64,
}

impl GridReport {
    /// Rebuilds the summary fields from `cells`.
    #[allow(clippy::too_many_arguments)]
    pub fn from_cells(
        experiment: String,
        method: Method,
        spec_seed: u64,
        placement: Placement,
        standard_bound: f64,
        folds: usize,
        cells: Vec<GridCell>,
        wall_time_s: f64,
    ) -> Result<Self> {
        let best = cells
            .iter()
            .min_by(|a, b| a.rank(b))
            .cloned()
            .ok_or_else(|| Error::usage("grid report needs at least one cell"))?;
        let (_, rmse_std) = mean_std(&best.fold_rmses);
        Ok(GridReport {
            experiment,
            method,
            config: ConfigEcho {
                m: best.m,
                alpha_min_deg: best.alpha_min_deg,
                alpha_max_deg: best.alpha_max_deg,
                placement,
                seed: spec_seed,
                standard_bound,
            },
            folds,
            rmse_mean: best.rmse_mean,
            rmse_std,
            best,
            cells,
            wall_time_s,
        })
    }

    pub fn without_timing(mut self) -> Self {
        self.wall_time_s = 0.0;
        self
    }
}

/// Cross-validates every cell of `spec`, cells in parallel.
pub fn grid_search(ds: &Dataset, spec: &GridSpec, method: Method) -> Result<GridReport> {
    grid_search_with(ds, spec, method, true)
}

/// [`grid_search`] with explicit control over parallel cell evaluation.
///
/// Cell `c` uses seed `derive(spec.seed, c)` and every cell shares one fold
/// plan, so the report does not depend on `parallel`.
pub fn grid_search_with(ds: &Dataset, spec: &GridSpec, method: Method, parallel: bool) -> Result<GridReport> {
    spec.validate()?;
    let start = Instant::now();
    let plan = kfold(ds.len(), spec.folds, spec.seed)?;
    let cells = spec.cells();

    let eval = |(idx, &(m, lo, hi)): (usize, &(usize, f64, f64))| -> Result<GridCell> {
        let cfg = GenConfig {
            m,
            n: ds.dim(),
            alpha_min: lo,
            alpha_max: hi,
            placement: spec.placement,
            rotation_bound: 1.0,
            standard_bound: spec.standard_bound,
            seed: seed::derive(spec.seed, idx as u64),
        };
        let cv = cross_validate(ds, &cfg, method, &plan)?;
        Ok(GridCell {
            m,
            alpha_min_deg: lo,
            alpha_max_deg: hi,
            rmse_mean: cv.mean,
            fold_rmses: cv.fold_rmses,
        })
    };

    let results: Result<Vec<GridCell>> = if parallel {
        cells.par_iter().enumerate().map(eval).collect()
    } else {
        cells.iter().enumerate().map(eval).collect()
    };

    GridReport::from_cells(
        ds.name.clone(),
        method,
        spec.seed,
        spec.placement,
        spec.standard_bound,
        spec.folds,
        results?,
        start.elapsed().as_secs_f64(),
    )
}
