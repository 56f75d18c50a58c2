//! Fixtures shared by the benchmarks in `benches/`.

use randnet::data::{make_synthetic, Sampling, TargetFunction};
use randnet::param_gen::{generate_hidden_params, PlacementContext};
use randnet::{Dataset, GenConfig, HiddenParams};

/// Noisy 2-D training set of `n` points.
pub fn surface(n: usize) -> Dataset {
    make_synthetic(TargetFunction::SineExp2d, n, Sampling::UniformRandom, 0.2, 7).expect("valid sample count")
}

pub fn hidden(m: usize, n: usize) -> HiddenParams {
    let cfg = GenConfig::new(m, n).with_angles(29.0, 90.0).with_seed(3);
    generate_hidden_params(&cfg, &PlacementContext::unit()).expect("valid config")
}
