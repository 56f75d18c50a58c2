use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};

use super::Dataset;
use crate::error::{Error, Result};
use crate::seed::{self, salt};

/// Random train/test partition; the training part gets `⌈f·N⌉` samples.
/// Both parts keep the original row order.
pub fn split_train_test(ds: &Dataset, train_fraction: f64, seed: u64) -> Result<(Dataset, Dataset)> {
    if !(train_fraction > 0.0 && train_fraction < 1.0) {
        return Err(Error::usage(format!(
            "train fraction must lie in (0, 1), got {train_fraction}"
        )));
    }
    let n = ds.len();
    let n_train = (train_fraction * n as f64).ceil() as usize;
    if n_train == 0 || n_train >= n {
        return Err(Error::usage(format!(
            "fraction {train_fraction} of {n} samples leaves an empty part"
        )));
    }
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(&mut seed::substream(seed, salt::SPLIT));
    let (train, test) = idx.split_at_mut(n_train);
    train.sort_unstable();
    test.sort_unstable();
    Ok((ds.subset(train), ds.subset(test)))
}

/// Assignment of samples to `k` cross-validation folds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldPlan {
    pub k: usize,
    pub assignments: Vec<usize>,
}

impl FoldPlan {
    /// `(fit indices, held-out indices)` for fold `f`.
    pub fn fold(&self, f: usize) -> (Vec<usize>, Vec<usize>) {
        let mut fit = Vec::with_capacity(self.assignments.len());
        let mut held = Vec::new();
        for (i, &a) in self.assignments.iter().enumerate() {
            if a == f {
                held.push(i);
            } else {
                fit.push(i);
            }
        }
        (fit, held)
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut s = vec![0; self.k];
        for &a in &self.assignments {
            s[a] += 1;
        }
        s
    }
}

/// Shuffled, balanced `k`-fold assignment of `n` samples.
pub fn kfold(n: usize, k: usize, seed: u64) -> Result<FoldPlan> {
    if k < 2 {
        return Err(Error::usage(format!("need at least 2 folds, got {k}")));
    }
    if k > n {
        return Err(Error::usage(format!("{k} folds for {n} samples")));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut seed::substream(seed, salt::FOLDS));
    let mut assignments = vec![0; n];
    for (pos, &i) in order.iter().enumerate() {
        assignments[i] = pos % k;
    }
    Ok(FoldPlan { k, assignments })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;

    fn ds(n: usize) -> Dataset {
        let x = Matrix::from_fn(n, 1, |i, _| i as f64);
        Dataset::new("s", x, (0..n).map(|i| i as f64).collect()).unwrap()
    }

    #[test]
    fn split_sizes() {
        let (tr, te) = split_train_test(&ds(8192), 0.75, 1).unwrap();
        assert_eq!((tr.len(), te.len()), (6144, 2048));
        let (tr, te) = split_train_test(&ds(2), 0.5, 1).unwrap();
        assert_eq!((tr.len(), te.len()), (1, 1));
        assert!(split_train_test(&ds(2), 1.0, 1).is_err());
        assert!(split_train_test(&ds(2), 0.0, 1).is_err());
    }

    #[test]
    fn split_is_deterministic_partition() {
        let d = ds(100);
        let (a, b) = split_train_test(&d, 0.7, 3).unwrap();
        let (a2, _) = split_train_test(&d, 0.7, 3).unwrap();
        assert_eq!(a, a2);
        let mut all: Vec<f64> = a.y.iter().chain(&b.y).copied().collect();
        all.sort_by(f64::total_cmp);
        assert_eq!(all, d.y);
    }

    #[test]
    fn fold_examples() {
        let p = kfold(10, 10, 0).unwrap();
        assert_eq!(p.sizes(), vec![1; 10]);
        let p = kfold(5000, 10, 0).unwrap();
        assert_eq!(p.sizes(), vec![500; 10]);
        let p = kfold(23, 4, 9).unwrap();
        let s = p.sizes();
        assert!(s.iter().max().unwrap() - s.iter().min().unwrap() <= 1);
        assert!(kfold(3, 4, 0).is_err());
        assert!(kfold(3, 1, 0).is_err());
    }

    #[test]
    fn folds_partition_indices() {
        let p = kfold(37, 5, 2).unwrap();
        let mut seen = [0; 37];
        for f in 0..5 {
            let (fit, held) = p.fold(f);
            assert_eq!(fit.len() + held.len(), 37);
            assert!(held.iter().all(|i| !fit.contains(i)));
            for i in held {
                seen[i] += 1;
            }
        }
        assert!(seen.iter().all(|&c| c == 1));
    }
}
