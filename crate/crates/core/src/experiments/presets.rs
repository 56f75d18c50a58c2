//! The benchmark case studies: data construction and reference settings.

use std::path::Path;

use crate::data::{
    load_table, make_synthetic, split_train_test, Dataset, Normalizer, Sampling, TableFormat,
    TargetFunction,
};
use crate::error::Result;
use crate::param_gen::GenConfig;
use crate::seed;

/// Synthetic targets are rescaled to this range using training statistics.
pub const SYNTHETIC_OUTPUT_RANGE: (f64, f64) = (-1.0, 1.0);

/// Side of the square test grid for the 2-D function (316² = 99 856 points).
pub const DEFAULT_GRID_SIDE: usize = 316;

/// A train/test pair, both rescaled with the training set's normalizer.
#[derive(Debug, Clone)]
pub struct Split {
    pub train: Dataset,
    pub test: Dataset,
}

fn normalized(train: Dataset, test: Dataset, inputs: Option<(f64, f64)>, output: (f64, f64)) -> Split {
    let norm = Normalizer::fit(&train, inputs, Some(output));
    Split {
        train: norm.apply(&train),
        test: norm.apply(&test),
    }
}

/// `sin(20eˣ)x²`: 5000 noisy (±0.2) uniform training points, 5000 noiseless
/// uniform test points.
pub fn sine_exp_1d(seed: u64) -> Result<Split> {
    let train = make_synthetic(TargetFunction::SineExp1d, 5000, Sampling::UniformRandom, 0.2, seed::derive(seed, 0))?;
    let test = make_synthetic(TargetFunction::SineExp1d, 5000, Sampling::UniformRandom, 0.0, seed::derive(seed, 1))?;
    Ok(normalized(train, test, None, SYNTHETIC_OUTPUT_RANGE))
}

/// Three Gaussian bumps: 1000 noiseless uniform training points, 300-point
/// regular test grid.
pub fn three_gaussians(seed: u64) -> Result<Split> {
    let train = make_synthetic(TargetFunction::ThreeGauss1d, 1000, Sampling::UniformRandom, 0.0, seed::derive(seed, 0))?;
    let test = make_synthetic(TargetFunction::ThreeGauss1d, 300, Sampling::RegularGrid, 0.0, 0)?;
    Ok(normalized(train, test, None, SYNTHETIC_OUTPUT_RANGE))
}

/// 2-D sine-exp sum: 5000 noisy (±0.2) uniform training points, noiseless
/// `grid_side²` regular test grid.
pub fn sine_exp_2d(seed: u64, grid_side: usize) -> Result<Split> {
    let train = make_synthetic(TargetFunction::SineExp2d, 5000, Sampling::UniformRandom, 0.2, seed::derive(seed, 0))?;
    let test = make_synthetic(TargetFunction::SineExp2d, grid_side * grid_side, Sampling::RegularGrid, 0.0, 0)?;
    Ok(normalized(train, test, None, SYNTHETIC_OUTPUT_RANGE))
}

/// Tabular data (e.g. the KEEL Computer Activity set): random 75/25 split,
/// inputs and target rescaled to `[0, 1]` with training statistics.
pub fn tabular(path: &Path, seed: u64) -> Result<Split> {
    let ds = load_table(path, TableFormat::from_path(path))?;
    let (train, test) = split_train_test(&ds, 0.75, seed)?;
    Ok(normalized(train, test, Some((0.0, 1.0)), (0.0, 1.0)))
}

/// Best known slope-angle settings for the three-Gaussian target.
pub fn three_gaussians_config(seed: u64) -> GenConfig {
    GenConfig::new(320, 1).with_angles(85.0, 90.0).with_seed(seed)
}

pub fn sine_exp_2d_config(seed: u64) -> GenConfig {
    GenConfig::new(700, 2).with_angles(29.0, 90.0).with_seed(seed)
}

pub fn tabular_config(n: usize, seed: u64) -> GenConfig {
    GenConfig::new(600, n).with_angles(45.0, 90.0).with_seed(seed)
}
