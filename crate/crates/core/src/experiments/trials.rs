use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{fit_and_score, mean_std, ConfigEcho, Method};
use crate::data::Dataset;
use crate::error::{Error, Result};
use crate::param_gen::GenConfig;
use crate::seed;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub trial: usize,
    pub seed: u64,
    pub rmse: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialReport {
    pub experiment: String,
    pub method: Method,
    pub config: ConfigEcho,
    pub trials: Vec<TrialRecord>,
    pub rmse_mean: f64,
    /// Population standard deviation of the trial RMSEs.
    pub rmse_std: f64,
    pub wall_time_s: f64,
}

impl TrialReport {
    pub fn from_trials(
        experiment: String,
        method: Method,
        config: ConfigEcho,
        trials: Vec<TrialRecord>,
        wall_time_s: f64,
    ) -> Result<Self> {
        if trials.is_empty() {
            return Err(Error::usage("a trial report needs at least one trial"));
        }
        let rmses: Vec<f64> = trials.iter().map(|t| t.rmse).collect();
        let (rmse_mean, rmse_std) = mean_std(&rmses);
        Ok(TrialReport {
            experiment,
            method,
            config,
            trials,
            rmse_mean,
            rmse_std,
            wall_time_s,
        })
    }

    pub fn rmses(&self) -> Vec<f64> {
        self.trials.iter().map(|t| t.rmse).collect()
    }

    pub fn without_timing(mut self) -> Self {
        self.wall_time_s = 0.0;
        self
    }
}

/// `trials` independent generate → fit → test runs; trial `t` uses seed
/// `derive(cfg.seed, t)`.
pub fn repeated_trials(
    train: &Dataset,
    test: &Dataset,
    cfg: &GenConfig,
    method: Method,
    trials: usize,
) -> Result<TrialReport> {
    if trials == 0 {
        return Err(Error::usage("trial count must be at least 1"));
    }
    let start = Instant::now();
    let records = (0..trials)
        .into_par_iter()
        .map(|t| {
            let s = seed::derive(cfg.seed, t as u64);
            let trial_cfg = GenConfig { seed: s, ..cfg.clone() };
            let (_, rmse) = fit_and_score(train, test, &trial_cfg, method)?;
            Ok(TrialRecord { trial: t, seed: s, rmse })
        })
        .collect::<Result<Vec<_>>>()?;
    TrialReport::from_trials(
        train.name.clone(),
        method,
        ConfigEcho::from_config(cfg),
        records,
        start.elapsed().as_secs_f64(),
    )
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    pub proposed: TrialReport,
    pub standard: TrialReport,
    /// `standard.rmse_mean / proposed.rmse_mean`.
    pub ratio: f64,
}

/// Repeated trials of two pipelines on the same data.
///
/// The first run is reported as `proposed` and the second as `standard`,
/// whatever methods they actually use.
pub fn compare_methods(
    train: &Dataset,
    test: &Dataset,
    proposed: (&GenConfig, Method),
    standard: (&GenConfig, Method),
    trials: usize,
) -> Result<Comparison> {
    if proposed.0.n != standard.0.n {
        return Err(Error::usage("compared configurations have different input dimensions"));
    }
    let p = repeated_trials(train, test, proposed.0, proposed.1, trials)?;
    let s = repeated_trials(train, test, standard.0, standard.1, trials)?;
    let ratio = s.rmse_mean / p.rmse_mean;
    Ok(Comparison {
        proposed: p,
        standard: s,
        ratio,
    })
}
