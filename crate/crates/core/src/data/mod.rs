//! Datasets: benchmark target functions, synthetic sampling, normalization,
//! file I/O and train/test/fold partitioning.

mod functions;
mod normalize;
mod split;
mod synth;
mod table;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;

pub use functions::{tf_sine_exp_1d, tf_sine_exp_2d, tf_three_gaussians_1d, TargetFunction};
pub use normalize::{normalize, Normalizer};
pub use split::{kfold, split_train_test, FoldPlan};
pub use synth::{make_synthetic, regular_grid, Sampling};
pub use table::{load_table, write_csv, TableFormat};

/// Inputs `X` (`N × n`) with scalar targets `y`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dataset {
    pub x: Matrix,
    pub y: Vec<f64>,
    pub name: String,
    pub normalization: Option<Normalizer>,
}

impl Dataset {
    pub fn new(name: impl Into<String>, x: Matrix, y: Vec<f64>) -> Result<Self> {
        if x.rows() == 0 {
            return Err(Error::data("dataset has no samples"));
        }
        if x.rows() != y.len() {
            return Err(Error::data(format!(
                "{} input rows but {} targets",
                x.rows(),
                y.len()
            )));
        }
        if !x.is_finite() || !y.iter().all(|v| v.is_finite()) {
            return Err(Error::data("dataset contains non-finite values"));
        }
        Ok(Dataset {
            x,
            y,
            name: name.into(),
            normalization: None,
        })
    }

    pub fn len(&self) -> usize {
        self.y.len()
    }

    pub fn is_empty(&self) -> bool {
        self.y.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.x.cols()
    }

    /// Rows `idx`, in order. Carries over the normalization record.
    pub fn subset(&self, idx: &[usize]) -> Dataset {
        Dataset {
            x: self.x.select_rows(idx),
            y: idx.iter().map(|&i| self.y[i]).collect(),
            name: self.name.clone(),
            normalization: self.normalization.clone(),
        }
    }
}
