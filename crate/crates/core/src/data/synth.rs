use rand::Rng as _;
use serde::{Deserialize, Serialize};

use super::{Dataset, TargetFunction};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::seed::{self, salt};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Sampling {
    /// i.i.d. uniform on the unit hypercube.
    UniformRandom,
    /// Evenly spaced grid including both endpoints of every dimension.
    RegularGrid,
}

impl std::str::FromStr for Sampling {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uniform" | "uniform-random" => Ok(Sampling::UniformRandom),
            "grid" | "regular-grid" => Ok(Sampling::RegularGrid),
            other => Err(Error::usage(format!("unknown sampling `{other}`"))),
        }
    }
}

fn linspace(k: usize) -> Vec<f64> {
    match k {
        0 => Vec::new(),
        1 => vec![0.0],
        _ => (0..k).map(|i| i as f64 / (k - 1) as f64).collect(),
    }
}

/// `side^dim` grid points over `[0, 1]^dim`, last coordinate varying fastest.
pub fn regular_grid(side: usize, dim: usize) -> Matrix {
    let axis = linspace(side);
    let total = side.pow(dim as u32);
    Matrix::from_fn(total, dim, |row, j| {
        let stride = side.pow((dim - 1 - j) as u32);
        axis[(row / stride) % side]
    })
}

/// Samples `n_samples` inputs from the unit hypercube and evaluates `tf`,
/// adding i.i.d. uniform noise in `[-noise, noise]` when `noise > 0`.
///
/// A 2-D regular grid needs a perfect-square sample count.
pub fn make_synthetic(
    tf: TargetFunction,
    n_samples: usize,
    sampling: Sampling,
    noise: f64,
    seed: u64,
) -> Result<Dataset> {
    if n_samples == 0 {
        return Err(Error::usage("sample count must be positive"));
    }
    if !(noise >= 0.0 && noise.is_finite()) {
        return Err(Error::usage(format!("noise amplitude must be >= 0, got {noise}")));
    }
    let dim = tf.dim();
    let x = match sampling {
        Sampling::UniformRandom => {
            let mut rng = seed::substream(seed, salt::INPUTS);
            Matrix::from_fn(n_samples, dim, |_, _| rng.random::<f64>())
        }
        Sampling::RegularGrid => {
            let side = (n_samples as f64).powf(1.0 / dim as f64).round() as usize;
            if side.pow(dim as u32) != n_samples {
                return Err(Error::usage(format!(
                    "{n_samples} samples do not form a regular {dim}-D grid"
                )));
            }
            regular_grid(side, dim)
        }
    };

    let mut y: Vec<f64> = x.row_iter().map(|r| tf.eval(r)).collect();
    if noise > 0.0 {
        let mut rng = seed::substream(seed, salt::NOISE);
        for v in &mut y {
            *v += rng.random_range(-noise..=noise);
        }
    }
    Dataset::new(tf.as_str(), x, y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn training_set_shape() {
        let ds = make_synthetic(TargetFunction::SineExp1d, 5000, Sampling::UniformRandom, 0.2, 1).unwrap();
        assert_eq!((ds.len(), ds.dim()), (5000, 1));
        assert!(ds.x.as_slice().iter().all(|v| (0.0..1.0).contains(v)));
        for (r, y) in ds.x.row_iter().zip(&ds.y) {
            assert!((y - tf_at(r)).abs() <= 0.2 + 1e-15);
        }
        fn tf_at(r: &[f64]) -> f64 {
            TargetFunction::SineExp1d.eval(r)
        }
    }

    #[test]
    fn grid_test_set() {
        let ds = make_synthetic(TargetFunction::ThreeGauss1d, 300, Sampling::RegularGrid, 0.0, 0).unwrap();
        assert_eq!(ds.len(), 300);
        assert_eq!(ds.x.get(0, 0), 0.0);
        assert_eq!(ds.x.get(299, 0), 1.0);
        for (r, y) in ds.x.row_iter().zip(&ds.y) {
            assert_eq!(*y, TargetFunction::ThreeGauss1d.eval(r));
        }
    }

    #[test]
    fn two_dim_grid_needs_square() {
        assert!(make_synthetic(TargetFunction::SineExp2d, 100_000, Sampling::RegularGrid, 0.0, 0).is_err());
        let ds = make_synthetic(TargetFunction::SineExp2d, 316 * 316, Sampling::RegularGrid, 0.0, 0).unwrap();
        assert_eq!(ds.len(), 99_856);
    }

    #[test]
    fn grid_is_even_and_covers_corners() {
        let g = regular_grid(5, 2);
        assert_eq!(g.rows(), 25);
        assert_eq!(g.row(0), &[0.0, 0.0]);
        assert_eq!(g.row(1), &[0.0, 0.25]);
        assert_eq!(g.row(5), &[0.25, 0.0]);
        assert_eq!(g.row(24), &[1.0, 1.0]);
    }

    #[test]
    fn seeded_and_validated() {
        let a = make_synthetic(TargetFunction::SineExp2d, 50, Sampling::UniformRandom, 0.2, 4).unwrap();
        let b = make_synthetic(TargetFunction::SineExp2d, 50, Sampling::UniformRandom, 0.2, 4).unwrap();
        assert_eq!(a, b);
        assert!(make_synthetic(TargetFunction::SineExp1d, 0, Sampling::UniformRandom, 0.0, 0).is_err());
        assert!(make_synthetic(TargetFunction::SineExp1d, 3, Sampling::UniformRandom, -1.0, 0).is_err());
    }
}
