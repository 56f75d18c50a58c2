use serde::{Deserialize, Serialize};

use crate::data::{regular_grid, Dataset};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::slfn::{hidden_matrix, Network};

/// Data behind the fitted-curve figures.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FitTrace {
    Curve {
        x_grid: Vec<f64>,
        y_fit: Vec<f64>,
        /// `cs_traces[i][g]`: node `i`'s output at `x_grid[g]`.
        cs_traces: Vec<Vec<f64>>,
        /// `cs_traces[i][g] · β_i`.
        weighted_cs_traces: Vec<Vec<f64>>,
    },
    Surface {
        x1_grid: Vec<f64>,
        x2_grid: Vec<f64>,
        /// `y_surface[i][j]` is the prediction at `(x1_grid[i], x2_grid[j])`.
        y_surface: Vec<Vec<f64>>,
    },
}

fn axis(lo: f64, hi: f64, k: usize) -> Vec<f64> {
    if k == 1 {
        return vec![lo];
    }
    (0..k).map(|g| lo + (hi - lo) * g as f64 / (k - 1) as f64).collect()
}

/// Evaluates a fitted network on a regular grid spanning the input range of
/// `ds` (`grid_size` points per dimension).
pub fn emit_fit_trace(net: &Network, ds: &Dataset, grid_size: usize) -> Result<FitTrace> {
    if !net.fitted {
        return Err(Error::NotFitted);
    }
    if grid_size == 0 {
        return Err(Error::usage("grid size must be positive"));
    }
    let n = net.hidden.dim();
    if ds.dim() != n {
        return Err(Error::usage(format!("network has {n} inputs, dataset has {}", ds.dim())));
    }
    let range = |j: usize| {
        let col = ds.x.column(j);
        let lo = col.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = col.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        (lo, hi)
    };
    match n {
        1 => {
            let (lo, hi) = range(0);
            let x_grid = axis(lo, hi, grid_size);
            let x = Matrix::from_vec(grid_size, 1, x_grid.clone())?;
            let h = hidden_matrix(&x, &net.hidden)?.into_matrix();
            let y_fit = h.mul_vec(&net.beta)?;
            let cs_traces: Vec<Vec<f64>> = (0..h.cols()).map(|i| h.column(i)).collect();
            let weighted_cs_traces = cs_traces
                .iter()
                .zip(&net.beta)
                .map(|(t, &b)| t.iter().map(|v| v * b).collect())
                .collect();
            Ok(FitTrace::Curve {
                x_grid,
                y_fit,
                cs_traces,
                weighted_cs_traces,
            })
        }
        2 => {
            let ((lo1, hi1), (lo2, hi2)) = (range(0), range(1));
            let unit = regular_grid(grid_size, 2);
            let x = Matrix::from_fn(unit.rows(), 2, |r, j| {
                let (lo, hi) = if j == 0 { (lo1, hi1) } else { (lo2, hi2) };
                lo + (hi - lo) * unit.get(r, j)
            });
            let y = net.predict(&x)?;
            Ok(FitTrace::Surface {
                x1_grid: axis(lo1, hi1, grid_size),
                x2_grid: axis(lo2, hi2, grid_size),
                y_surface: y.chunks(grid_size).map(<[f64]>::to_vec).collect(),
            })
        }
        _ => Err(Error::Unsupported(format!(
            "fit traces need 1 or 2 inputs, network has {n}"
        ))),
    }
}
