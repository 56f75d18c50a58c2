use rand::Rng as _;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::seed::Rng;

/// Where hidden nodes put their inflection points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Placement {
    /// Uniformly inside the input hypercube.
    Hypercube,
    /// On a uniformly chosen training input.
    TrainingSample,
    /// Node `i` on cluster prototype `i`.
    ClusterPrototype,
}

impl Placement {
    pub fn as_str(self) -> &'static str {
        match self {
            Placement::Hypercube => "hypercube",
            Placement::TrainingSample => "training-sample",
            Placement::ClusterPrototype => "cluster-prototype",
        }
    }
}

impl std::fmt::Display for Placement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Placement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hypercube" => Ok(Placement::Hypercube),
            "training" | "training-sample" => Ok(Placement::TrainingSample),
            "prototype" | "cluster-prototype" => Ok(Placement::ClusterPrototype),
            other => Err(Error::usage(format!("unknown placement `{other}`"))),
        }
    }
}

/// Data available to the anchor selector.
#[derive(Debug, Clone, Default)]
pub struct PlacementContext {
    /// Per-dimension `[min, max]`; `None` means the unit hypercube.
    pub bounds: Option<Vec<(f64, f64)>>,
    pub training: Option<Matrix>,
    pub prototypes: Option<Matrix>,
}

impl PlacementContext {
    /// Unit hypercube `[0, 1]^n` for whatever `n` the generator asks for.
    pub fn unit() -> Self {
        Self::default()
    }

    pub fn hypercube(bounds: Vec<(f64, f64)>) -> Self {
        PlacementContext {
            bounds: Some(bounds),
            ..Self::default()
        }
    }

    pub fn with_training(mut self, x: Matrix) -> Self {
        self.training = Some(x);
        self
    }

    pub fn with_prototypes(mut self, p: Matrix) -> Self {
        self.prototypes = Some(p);
        self
    }

    pub fn validate(&self, placement: Placement, m: usize, n: usize) -> Result<()> {
        if let Some(b) = &self.bounds {
            if b.len() != n {
                return Err(Error::config(format!(
                    "hypercube has {} dimensions, inputs have {n}",
                    b.len()
                )));
            }
            if let Some(k) = b.iter().position(|(lo, hi)| !lo.is_finite() || !hi.is_finite() || lo > hi) {
                return Err(Error::config(format!("invalid hypercube bounds in dimension {k}")));
            }
        }
        match placement {
            Placement::Hypercube => Ok(()),
            Placement::TrainingSample => match &self.training {
                Some(x) if x.rows() > 0 && x.cols() == n => Ok(()),
                Some(x) if x.rows() > 0 => Err(Error::config(format!(
                    "training inputs have {} columns, expected {n}",
                    x.cols()
                ))),
                _ => Err(Error::config("training-sample placement needs nonempty training inputs")),
            },
            Placement::ClusterPrototype => match &self.prototypes {
                Some(p) if p.rows() == m && p.cols() == n => Ok(()),
                Some(p) => Err(Error::config(format!(
                    "prototype matrix is {}x{}, expected {m}x{n}",
                    p.rows(),
                    p.cols()
                ))),
                None => Err(Error::config("cluster-prototype placement needs prototypes")),
            },
        }
    }
}

/// Picks the inflection anchor for node `node`.
///
/// For [`Placement::Hypercube`] the dimension comes from the bounds, or from
/// the training/prototype data when the bounds are implicit.
pub fn select_anchor(
    ctx: &PlacementContext,
    placement: Placement,
    node: usize,
    rng: &mut Rng,
) -> Result<Vec<f64>> {
    match placement {
        Placement::Hypercube => {
            let bounds = ctx.bounds.as_ref().ok_or_else(|| {
                Error::config("hypercube placement with implicit bounds needs a dimension; use select_anchor_in")
            })?;
            Ok(sample_box(bounds.iter().copied(), rng))
        }
        Placement::TrainingSample => {
            let x = ctx
                .training
                .as_ref()
                .filter(|x| x.rows() > 0)
                .ok_or_else(|| Error::config("training-sample placement needs nonempty training inputs"))?;
            let row = rng.random_range(0..x.rows());
            Ok(x.row(row).to_vec())
        }
        Placement::ClusterPrototype => {
            let p = ctx
                .prototypes
                .as_ref()
                .ok_or_else(|| Error::config("cluster-prototype placement needs prototypes"))?;
            if node >= p.rows() {
                return Err(Error::config(format!(
                    "node {node} has no prototype ({} available)",
                    p.rows()
                )));
            }
            Ok(p.row(node).to_vec())
        }
    }
}

/// [`select_anchor`] with an explicit input dimension, so implicit unit
/// bounds can be resolved.
pub(crate) fn select_anchor_in(
    ctx: &PlacementContext,
    placement: Placement,
    node: usize,
    n: usize,
    rng: &mut Rng,
) -> Result<Vec<f64>> {
    if placement == Placement::Hypercube && ctx.bounds.is_none() {
        return Ok(sample_box(std::iter::repeat_n((0.0, 1.0), n), rng));
    }
    select_anchor(ctx, placement, node, rng)
}

fn sample_box(bounds: impl Iterator<Item = (f64, f64)>, rng: &mut Rng) -> Vec<f64> {
    bounds
        .map(|(lo, hi)| if lo == hi { lo } else { rng.random_range(lo..=hi) })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seed;

    #[test]
    fn hypercube_point_in_unit_square() {
        let mut r = seed::rng(1);
        let ctx = PlacementContext::hypercube(vec![(0.0, 1.0); 2]);
        for _ in 0..500 {
            let p = select_anchor(&ctx, Placement::Hypercube, 0, &mut r).unwrap();
            assert_eq!(p.len(), 2);
            assert!(p.iter().all(|v| (0.0..=1.0).contains(v)));
        }
        let p = select_anchor_in(&PlacementContext::unit(), Placement::Hypercube, 0, 3, &mut r).unwrap();
        assert_eq!(p.len(), 3);
    }

    #[test]
    fn custom_bounds_respected() {
        let mut r = seed::rng(2);
        let ctx = PlacementContext::hypercube(vec![(-2.0, -1.0), (5.0, 5.0)]);
        let p = select_anchor(&ctx, Placement::Hypercube, 0, &mut r).unwrap();
        assert!((-2.0..=-1.0).contains(&p[0]));
        assert_eq!(p[1], 5.0);
    }

    #[test]
    fn singleton_training_set_is_returned() {
        let mut r = seed::rng(1);
        let x = Matrix::from_rows(&[[0.25, 0.75]]).unwrap();
        let ctx = PlacementContext::unit().with_training(x);
        let p = select_anchor(&ctx, Placement::TrainingSample, 7, &mut r).unwrap();
        assert_eq!(p, vec![0.25, 0.75]);
    }

    #[test]
    fn prototype_by_node_index() {
        let mut r = seed::rng(1);
        let protos = Matrix::from_fn(5, 2, |i, j| (i * 2 + j) as f64);
        let ctx = PlacementContext::unit().with_prototypes(protos);
        let p = select_anchor(&ctx, Placement::ClusterPrototype, 3, &mut r).unwrap();
        assert_eq!(p, vec![6.0, 7.0]);
    }

    #[test]
    fn missing_context_is_config_error() {
        let mut r = seed::rng(1);
        let ctx = PlacementContext::unit();
        assert!(matches!(
            select_anchor(&ctx, Placement::TrainingSample, 0, &mut r),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            select_anchor(&ctx, Placement::ClusterPrototype, 0, &mut r),
            Err(Error::Config(_))
        ));
        assert!(ctx.validate(Placement::TrainingSample, 2, 1).is_err());
        let wrong = PlacementContext::unit().with_prototypes(Matrix::zeros(3, 1));
        assert!(wrong.validate(Placement::ClusterPrototype, 4, 1).is_err());
        assert!(wrong.validate(Placement::ClusterPrototype, 3, 1).is_ok());
    }

    #[test]
    fn placement_names_parse() {
        for p in [Placement::Hypercube, Placement::TrainingSample, Placement::ClusterPrototype] {
            assert_eq!(p.as_str().parse::<Placement>().unwrap(), p);
        }
        assert!("nowhere".parse::<Placement>().is_err());
    }
}
