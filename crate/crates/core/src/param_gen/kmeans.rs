//! Lloyd's k-means with k-means++ seeding, used to place nodes on cluster
//! prototypes.

use rand::Rng as _;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::seed;

fn sq_dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

fn nearest(x: &[f64], centroids: &Matrix) -> (usize, f64) {
    let mut best = (0, f64::INFINITY);
    for (j, c) in centroids.row_iter().enumerate() {
        let d = sq_dist(x, c);
        if d < best.1 {
            best = (j, d);
        }
    }
    best
}

/// Returns `m` centroids of the rows of `x`.
///
/// Deterministic given `seed`. A cluster that ends up empty is re-seeded with
/// the point lying farthest from its own centroid.
pub fn kmeans_prototypes(x: &Matrix, m: usize, max_iters: usize, seed: u64) -> Result<Matrix> {
    let (rows, dim) = x.shape();
    if m == 0 {
        return Err(Error::usage("cluster count must be positive"));
    }
    if rows < m {
        return Err(Error::usage(format!("{rows} points cannot form {m} clusters")));
    }
    let mut rng = seed::substream(seed, seed::salt::KMEANS);

    // k-means++ seeding
    let mut centroids = Matrix::zeros(m, dim);
    let first = rng.random_range(0..rows);
    centroids.row_mut(0).copy_from_slice(x.row(first));
    let mut d2: Vec<f64> = x.row_iter().map(|r| sq_dist(r, x.row(first))).collect();
    for k in 1..m {
        let total: f64 = d2.iter().sum();
        let pick = if total > 0.0 {
            let mut target = rng.random_range(0.0..total);
            let mut chosen = rows - 1;
            for (i, &d) in d2.iter().enumerate() {
                if d > 0.0 && target < d {
                    chosen = i;
                    break;
                }
                target -= d;
            }
            // rounding can run `target` past the last positive weight
            if d2[chosen] == 0.0 {
                chosen = d2.iter().rposition(|&d| d > 0.0).unwrap_or(chosen);
            }
            chosen
        } else {
            rng.random_range(0..rows)
        };
        centroids.row_mut(k).copy_from_slice(x.row(pick));
        for (i, r) in x.row_iter().enumerate() {
            d2[i] = d2[i].min(sq_dist(r, x.row(pick)));
        }
    }

    let mut assign = vec![usize::MAX; rows];
    let mut dist = vec![0.0; rows];
    for _ in 0..max_iters.max(1) {
        let mut changed = false;
        for (i, r) in x.row_iter().enumerate() {
            let (j, d) = nearest(r, &centroids);
            dist[i] = d;
            if assign[i] != j {
                assign[i] = j;
                changed = true;
            }
        }
        if !changed {
            break;
        }

        let mut sums = Matrix::zeros(m, dim);
        let mut counts = vec![0usize; m];
        for (i, r) in x.row_iter().enumerate() {
            counts[assign[i]] += 1;
            for (s, v) in sums.row_mut(assign[i]).iter_mut().zip(r) {
                *s += v;
            }
        }

        let mut taken = vec![false; rows];
        for (k, &count) in counts.iter().enumerate() {
            if count > 0 {
                let inv = 1.0 / count as f64;
                for (c, s) in centroids.row_mut(k).iter_mut().zip(sums.row(k)) {
                    *c = s * inv;
                }
                continue;
            }
            let far = (0..rows)
                .filter(|&i| !taken[i])
                .max_by(|&a, &b| dist[a].total_cmp(&dist[b]).then(b.cmp(&a)))
                .expect("rows >= m guarantees a free point");
            taken[far] = true;
            dist[far] = 0.0;
            centroids.row_mut(k).copy_from_slice(x.row(far));
        }
    }
    Ok(centroids)
}
