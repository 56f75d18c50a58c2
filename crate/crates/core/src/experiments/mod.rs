//! Experiment harness: cross-validation, grid search, repeated trials,
//! method comparison and figure data.

mod cv;
mod grid;
pub mod presets;
mod report;
mod trace;
mod trials;

use serde::{Deserialize, Serialize};

use crate::data::Dataset;
use crate::error::{Error, Result};
use crate::param_gen::{self, GenConfig, Placement, PlacementContext};
use crate::seed::{self, salt};
use crate::slfn::{rmse, Network};

pub use cv::{cross_validate, CvResult};
pub use grid::{grid_search, grid_search_with, GridCell, GridReport, GridSpec, DEFAULT_ALPHA_MIN, DEFAULT_M};
pub use report::{export_report, import_report, Report, ReportFormat};
pub use trace::{emit_fit_trace, FitTrace};
pub use trials::{compare_methods, repeated_trials, Comparison, TrialRecord, TrialReport};

/// How hidden parameters are generated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Slope angle, rotation and anchor.
    Proposed,
    /// Weights and biases uniform on `[-s, s]`.
    Standard,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Proposed => "proposed",
            Method::Standard => "standard",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "proposed" => Ok(Method::Proposed),
            "standard" => Ok(Method::Standard),
            other => Err(Error::usage(format!("unknown method `{other}`"))),
        }
    }
}

/// Generates a hidden layer for `train` and fits its readout.
///
/// Hypercube placement uses the unit hypercube; inputs are expected to be
/// normalized to `[0, 1]`.
pub fn fit_network(train: &Dataset, cfg: &GenConfig, method: Method) -> Result<Network> {
    if cfg.n != train.dim() {
        return Err(Error::usage(format!(
            "config expects {} inputs, dataset has {}",
            cfg.n,
            train.dim()
        )));
    }
    let hidden = match method {
        Method::Standard => {
            cfg.validate()?;
            param_gen::generate_standard_from(cfg)?
        }
        Method::Proposed => {
            let ctx = match cfg.placement {
                Placement::Hypercube => PlacementContext::unit(),
                Placement::TrainingSample => PlacementContext::unit().with_training(train.x.clone()),
                Placement::ClusterPrototype => {
                    let protos = param_gen::kmeans_prototypes(
                        &train.x,
                        cfg.m,
                        100,
                        seed::derive(cfg.seed, salt::KMEANS),
                    )?;
                    PlacementContext::unit().with_prototypes(protos)
                }
            };
            param_gen::generate_hidden_params(cfg, &ctx)?
        }
    };
    Network::fit(hidden, &train.x, &train.y)
}

/// Fits on `train` and returns the network with its RMSE on `test`.
pub fn fit_and_score(train: &Dataset, test: &Dataset, cfg: &GenConfig, method: Method) -> Result<(Network, f64)> {
    let net = fit_network(train, cfg, method)?;
    let pred = net.predict(&test.x)?;
    let err = rmse(&pred, &test.y)?;
    Ok((net, err))
}

pub(crate) fn mean_std(v: &[f64]) -> (f64, f64) {
    let n = v.len() as f64;
    let mean = v.iter().sum::<f64>() / n;
    let var = v.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / n;
    (mean, var.sqrt())
}

/// Configuration echo stored in reports.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub m: usize,
    pub alpha_min_deg: f64,
    pub alpha_max_deg: f64,
    pub placement: Placement,
    pub seed: u64,
    pub standard_bound: f64,
}

impl ConfigEcho {
    pub fn from_config(cfg: &GenConfig) -> Self {
        ConfigEcho {
            m: cfg.m,
            alpha_min_deg: cfg.alpha_min,
            alpha_max_deg: cfg.alpha_max,
            placement: cfg.placement,
            seed: cfg.seed,
            standard_bound: cfg.standard_bound,
        }
    }

    pub fn to_config(&self, n: usize) -> GenConfig {
        GenConfig {
            m: self.m,
            n,
            alpha_min: self.alpha_min_deg,
            alpha_max: self.alpha_max_deg,
            placement: self.placement,
            rotation_bound: 1.0,
            standard_bound: self.standard_bound,
            seed: self.seed,
        }
    }
}
