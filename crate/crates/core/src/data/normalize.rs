use serde::{Deserialize, Serialize};

use super::Dataset;
use crate::matrix::Matrix;

/// `(min, max)` or `(lo, hi)`.
pub type Bounds = (f64, f64);

/// Min-max statistics and target ranges for an affine rescaling of inputs
/// and/or targets. Fitted on one dataset, applicable to others.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Normalizer {
    /// Per-input-dimension `(min, max)` of the fitting data, with target range.
    pub inputs: Option<(Vec<Bounds>, Bounds)>,
    /// `(min, max)` of the fitting targets, with target range.
    pub output: Option<((f64, f64), (f64, f64))>,
}

fn scale(v: f64, (min, max): (f64, f64), (lo, hi): (f64, f64)) -> f64 {
    if max > min {
        lo + (v - min) / (max - min) * (hi - lo)
    } else {
        0.5 * (lo + hi)
    }
}

fn unscale(v: f64, (min, max): (f64, f64), (lo, hi): (f64, f64)) -> f64 {
    if max > min {
        min + (v - lo) / (hi - lo) * (max - min)
    } else {
        min
    }
}

fn min_max(vals: impl Iterator<Item = f64>) -> (f64, f64) {
    vals.fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| (a.min(v), b.max(v)))
}

impl Normalizer {
    pub fn fit(ds: &Dataset, input_range: Option<(f64, f64)>, output_range: Option<(f64, f64)>) -> Self {
        let inputs = input_range.map(|r| {
            let stats = (0..ds.dim())
                .map(|j| min_max(ds.x.row_iter().map(|row| row[j])))
                .collect();
            (stats, r)
        });
        let output = output_range.map(|r| (min_max(ds.y.iter().copied()), r));
        Normalizer { inputs, output }
    }

    /// Rescales `ds` with the fitted statistics. Values outside the fitting
    /// range map outside the target range.
    pub fn apply(&self, ds: &Dataset) -> Dataset {
        let mut out = ds.clone();
        out.x = self.apply_inputs(&ds.x);
        if let Some((stats, range)) = self.output {
            for v in &mut out.y {
                *v = scale(*v, stats, range);
            }
        }
        out.normalization = Some(self.clone());
        out
    }

    pub fn apply_inputs(&self, x: &Matrix) -> Matrix {
        let mut x = x.clone();
        if let Some((stats, range)) = &self.inputs {
            for i in 0..x.rows() {
                for (v, &s) in x.row_mut(i).iter_mut().zip(stats) {
                    *v = scale(*v, s, *range);
                }
            }
        }
        x
    }

    /// Maps normalized targets back to the original scale.
    pub fn denormalize_y(&self, y: &[f64]) -> Vec<f64> {
        match self.output {
            Some((stats, range)) => y.iter().map(|&v| unscale(v, stats, range)).collect(),
            None => y.to_vec(),
        }
    }
}

/// Fits a [`Normalizer`] on `ds` and applies it. `None` leaves that side
/// untouched.
pub fn normalize(
    ds: &Dataset,
    input_range: Option<(f64, f64)>,
    output_range: Option<(f64, f64)>,
) -> (Dataset, Normalizer) {
    let n = Normalizer::fit(ds, input_range, output_range);
    (n.apply(ds), n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(x: &[[f64; 2]], y: &[f64]) -> Dataset {
        Dataset::new("t", Matrix::from_rows(x).unwrap(), y.to_vec()).unwrap()
    }

    #[test]
    fn targets_to_symmetric_range() {
        let d = ds(&[[0.0, 1.0], [1.0, 2.0], [2.0, 3.0]], &[0.0, 5.0, 10.0]);
        let (n, _) = normalize(&d, None, Some((-1.0, 1.0)));
        assert_eq!(n.y, vec![-1.0, 0.0, 1.0]);
        assert_eq!(n.x, d.x);
    }

    #[test]
    fn normalized_data_is_fixed_point() {
        let d = ds(&[[0.0, 1.0], [0.3, 0.0], [1.0, 0.7]], &[-1.0, 0.2, 1.0]);
        let (n, _) = normalize(&d, Some((0.0, 1.0)), Some((-1.0, 1.0)));
        for (a, b) in n.x.as_slice().iter().zip(d.x.as_slice()).chain(n.y.iter().zip(&d.y)) {
            assert!((a - b).abs() <= 1e-15);
        }
    }

    #[test]
    fn held_out_values_may_leave_range() {
        let train = ds(&[[0.0, 0.0], [1.0, 1.0]], &[0.0, 1.0]);
        let test = ds(&[[2.0, 0.5], [0.5, 0.5]], &[2.0, -1.0]);
        let norm = Normalizer::fit(&train, Some((0.0, 1.0)), Some((0.0, 1.0)));
        let t = norm.apply(&test);
        assert_eq!(t.y, vec![2.0, -1.0]);
        assert_eq!(t.x.row(0), &[2.0, 0.5]);
    }

    #[test]
    fn constant_column_maps_to_midpoint() {
        let d = ds(&[[3.0, 1.0], [3.0, 2.0]], &[4.0, 4.0]);
        let (n, norm) = normalize(&d, Some((0.0, 1.0)), Some((-1.0, 1.0)));
        assert_eq!(n.x.column(0), vec![0.5, 0.5]);
        assert_eq!(n.y, vec![0.0, 0.0]);
        assert_eq!(norm.denormalize_y(&n.y), vec![4.0, 4.0]);
    }
}
