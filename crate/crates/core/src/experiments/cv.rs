use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{fit_and_score, Method};
use crate::data::{Dataset, FoldPlan};
use crate::error::{Error, Result};
use crate::param_gen::GenConfig;
use crate::seed;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CvResult {
    pub mean: f64,
    pub fold_rmses: Vec<f64>,
}

/// `k`-fold cross-validation of the full randomized pipeline.
///
/// Each fold draws a fresh hidden layer from substream `f` of `cfg.seed`, fits
/// on the other `k − 1` folds and scores the held-out fold.
pub fn cross_validate(ds: &Dataset, cfg: &GenConfig, method: Method, plan: &FoldPlan) -> Result<CvResult> {
    if plan.assignments.len() != ds.len() {
        return Err(Error::usage(format!(
            "fold plan covers {} samples, dataset has {}",
            plan.assignments.len(),
            ds.len()
        )));
    }
    let fold_rmses = (0..plan.k)
        .into_par_iter()
        .map(|f| {
            let (fit_idx, held_idx) = plan.fold(f);
            if fit_idx.is_empty() || held_idx.is_empty() {
                return Err(Error::usage(format!("fold {f} is empty")));
            }
            let fold_cfg = GenConfig {
                seed: seed::derive(cfg.seed, f as u64),
                ..cfg.clone()
            };
            let (_, err) = fit_and_score(&ds.subset(&fit_idx), &ds.subset(&held_idx), &fold_cfg, method)?;
            Ok(err)
        })
        .collect::<Result<Vec<f64>>>()?;
    let mean = fold_rmses.iter().sum::<f64>() / fold_rmses.len() as f64;
    Ok(CvResult { mean, fold_rmses })
}
