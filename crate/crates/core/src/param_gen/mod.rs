//! Hidden-layer parameter generation.
//!
//! A sigmoid node `h(x) = 1 / (1 + exp(-(a·x + b)))` is described here by
//! three independent random choices:
//!
//! 1. its *slope angle* α, the angle between the tangent hyperplane at an
//!    inflection point and the input hyperplane. The weight norm follows from
//!    it as `‖a‖ = 4·tan α`;
//! 2. its *rotation* around the output axis, given by the first `n`
//!    components of the tangent hyperplane's normal vector;
//! 3. its *anchor* `x*`, the input point where `h(x*) = 0.5`, which fixes the
//!    bias as `b = -a·x*`.
//!
//! Drawing α from `(α_min, α_max)` puts the steep part of every sigmoid inside
//! the input hypercube instead of leaving most nodes saturated or flat, which
//! is what happens with weights drawn from a fixed interval such as `[-1, 1]`
//! (see [`generate_standard`]).
//!
//! Angles are in degrees everywhere in the public API.

mod kmeans;
mod placement;

use rand::Rng as _;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{dot, norm2, Matrix};
use crate::seed::{self, salt, Rng};

pub use kmeans::kmeans_prototypes;
pub use placement::{select_anchor, Placement, PlacementContext};

/// Sampled angles at or above this many degrees are redrawn; `tan` is
/// singular at 90°.
pub const MAX_ANGLE_DEG: f64 = 90.0 - 1e-9;

/// Rotation normals with a norm at or below this are redrawn.
pub const MIN_NORMAL_NORM: f64 = 1e-12;

fn to_rad(deg: f64) -> f64 {
    deg.to_radians()
}

/// Generation hyperparameters for one hidden layer.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenConfig {
    /// Number of hidden nodes.
    pub m: usize,
    /// Input dimension.
    pub n: usize,
    /// Lower slope-angle bound in degrees (exclusive).
    pub alpha_min: f64,
    /// Upper slope-angle bound in degrees (exclusive).
    pub alpha_max: f64,
    pub placement: Placement,
    /// Half-width `d` of the interval the rotation normal is drawn from.
    /// Only the direction of the normal matters, so this has no effect on the
    /// distribution of generated weights.
    pub rotation_bound: f64,
    /// Half-width of the weight/bias interval used by the standard baseline.
    pub standard_bound: f64,
    pub seed: u64,
}

impl GenConfig {
    pub fn new(m: usize, n: usize) -> Self {
        GenConfig {
            m,
            n,
            alpha_min: 0.0,
            alpha_max: 90.0,
            placement: Placement::Hypercube,
            rotation_bound: 1.0,
            standard_bound: 1.0,
            seed: 42,
        }
    }

    pub fn with_angles(mut self, alpha_min: f64, alpha_max: f64) -> Self {
        self.alpha_min = alpha_min;
        self.alpha_max = alpha_max;
        self
    }

    pub fn with_placement(mut self, placement: Placement) -> Self {
        self.placement = placement;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_standard_bound(mut self, s: f64) -> Self {
        self.standard_bound = s;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.m == 0 || self.n == 0 {
            return Err(Error::config(format!(
                "node count and input dimension must be positive (m={}, n={})",
                self.m, self.n
            )));
        }
        let (lo, hi) = (self.alpha_min, self.alpha_max);
        if !(lo.is_finite() && hi.is_finite() && 0.0 <= lo && lo < hi && hi <= 90.0) {
            return Err(Error::config(format!(
                "slope angles must satisfy 0 <= alpha_min < alpha_max <= 90, got ({lo}, {hi})"
            )));
        }
        if lo >= MAX_ANGLE_DEG {
            return Err(Error::config(format!("alpha_min {lo} leaves no samplable angle below 90")));
        }
        if !(self.rotation_bound > 0.0 && self.rotation_bound.is_finite()) {
            return Err(Error::config("rotation bound must be positive"));
        }
        if !(self.standard_bound > 0.0 && self.standard_bound.is_finite()) {
            return Err(Error::config("standard interval bound must be positive"));
        }
        Ok(())
    }
}

/// A generated hidden layer.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HiddenParams {
    /// `m × n`; row `i` holds the weights of node `i`.
    pub weights: Matrix,
    pub biases: Vec<f64>,
    /// Inflection anchor of each node, when generated by the slope-angle method.
    pub anchors: Option<Matrix>,
    /// Slope angle of each node in degrees, when generated by the slope-angle method.
    pub angles: Option<Vec<f64>>,
}

impl HiddenParams {
    pub fn nodes(&self) -> usize {
        self.weights.rows()
    }

    pub fn dim(&self) -> usize {
        self.weights.cols()
    }

    /// Pre-activation `a_i·x + b_i` of node `i`.
    pub fn activation(&self, i: usize, x: &[f64]) -> f64 {
        dot(self.weights.row(i), x) + self.biases[i]
    }
}

/// Draws a slope angle uniformly from the open interval `(alpha_min, alpha_max)`.
///
/// Draws that land on the lower endpoint, at or above [`MAX_ANGLE_DEG`], or
/// with a non-finite tangent are rejected and redrawn.
pub fn sample_slope_angle(cfg: &GenConfig, rng: &mut Rng) -> f64 {
    loop {
        let alpha = rng.random_range(cfg.alpha_min..cfg.alpha_max);
        if alpha > cfg.alpha_min && alpha < MAX_ANGLE_DEG && to_rad(alpha).tan().is_finite() {
            return alpha;
        }
    }
}

/// Draws the first `n` components of the tangent hyperplane's normal, each
/// i.i.d. uniform on `[-d, d]`. A vector with norm ≤ [`MIN_NORMAL_NORM`] is
/// discarded and the whole vector is redrawn.
pub fn sample_rotation_normal(n: usize, d: f64, rng: &mut Rng) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..n).map(|_| rng.random_range(-d..=d)).collect();
        if norm2(&v) > MIN_NORMAL_NORM {
            return v;
        }
    }
}

/// Output-axis component of the normal so the hyperplane is inclined at
/// `alpha` degrees: `(-1)^sign_bit · ‖a′‖ / tan α`.
pub fn compute_a0(a_prime: &[f64], alpha: f64, sign_bit: bool) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 90.0) {
        return Err(Error::domain(format!(
            "slope angle must lie strictly between 0 and 90 degrees, got {alpha}"
        )));
    }
    let norm = norm2(a_prime);
    if norm == 0.0 || !norm.is_finite() {
        return Err(Error::domain("rotation normal has zero or non-finite norm"));
    }
    let tan = to_rad(alpha).tan();
    let a0 = norm / tan;
    if a0 == 0.0 || !a0.is_finite() {
        return Err(Error::domain(format!("a0 degenerate at alpha={alpha}")));
    }
    Ok(if sign_bit { -a0 } else { a0 })
}

/// Sigmoid weights matching a tangent hyperplane with normal `(a′, a0)`:
/// `a_k = -4·a′_k / a0`.
pub fn weights_from_normal(a_prime: &[f64], a0: f64) -> Result<Vec<f64>> {
    if a0 == 0.0 || !a0.is_finite() {
        return Err(Error::domain("a0 must be finite and nonzero"));
    }
    Ok(a_prime.iter().map(|&ak| -4.0 * ak / a0).collect())
}

/// Bias placing the sigmoid's inflection point at `x_star`: `b = -a·x*`.
pub fn bias_from_anchor(a: &[f64], x_star: &[f64]) -> Result<f64> {
    if a.len() != x_star.len() {
        return Err(Error::usage(format!(
            "weights have length {}, anchor has length {}",
            a.len(),
            x_star.len()
        )));
    }
    Ok(-dot(a, x_star))
}

/// Slope angle in degrees of a sigmoid with weights `a`: `atan(‖a‖ / 4)`.
pub fn weight_to_angle(a: &[f64]) -> f64 {
    (norm2(a) / 4.0).atan().to_degrees()
}

/// Weight norm of a sigmoid with slope angle `alpha` degrees: `4·tan α`.
///
/// For a single input this is the weight magnitude itself.
pub fn angle_to_weight_norm(alpha: f64) -> f64 {
    4.0 * to_rad(alpha).tan()
}

/// Generates a hidden layer with the slope-angle / rotation / anchor method.
///
/// Node `i` draws from its own substream of `cfg.seed`, in this order: slope
/// angle, rotation normal, sign of `a0`, anchor. The result therefore depends
/// only on `(cfg, ctx)`.
pub fn generate_hidden_params(cfg: &GenConfig, ctx: &PlacementContext) -> Result<HiddenParams> {
    cfg.validate()?;
    ctx.validate(cfg.placement, cfg.m, cfg.n)?;

    let stream = seed::derive(cfg.seed, salt::NODES);
    let mut weights = Matrix::zeros(cfg.m, cfg.n);
    let mut anchors = Matrix::zeros(cfg.m, cfg.n);
    let mut biases = Vec::with_capacity(cfg.m);
    let mut angles = Vec::with_capacity(cfg.m);

    for i in 0..cfg.m {
        let mut rng = seed::substream(stream, i as u64);
        let alpha = sample_slope_angle(cfg, &mut rng);
        let a_prime = sample_rotation_normal(cfg.n, cfg.rotation_bound, &mut rng);
        let sign_bit = rng.random::<bool>();
        let a0 = compute_a0(&a_prime, alpha, sign_bit)?;
        let a = weights_from_normal(&a_prime, a0)?;
        let x_star = placement::select_anchor_in(ctx, cfg.placement, i, cfg.n, &mut rng)?;
        let b = bias_from_anchor(&a, &x_star)?;

        weights.row_mut(i).copy_from_slice(&a);
        anchors.row_mut(i).copy_from_slice(&x_star);
        biases.push(b);
        angles.push(alpha);
    }

    Ok(HiddenParams {
        weights,
        biases,
        anchors: Some(anchors),
        angles: Some(angles),
    })
}

/// Standard baseline: every weight and bias i.i.d. uniform on `[-s, s]`.
pub fn generate_standard(m: usize, n: usize, s: f64, rng: &mut Rng) -> Result<HiddenParams> {
    if !(s > 0.0 && s.is_finite()) {
        return Err(Error::config(format!("interval bound must be positive, got {s}")));
    }
    if m == 0 || n == 0 {
        return Err(Error::config("node count and input dimension must be positive"));
    }
    let weights = Matrix::from_fn(m, n, |_, _| rng.random_range(-s..=s));
    let biases = (0..m).map(|_| rng.random_range(-s..=s)).collect();
    Ok(HiddenParams {
        weights,
        biases,
        anchors: None,
        angles: None,
    })
}

/// [`generate_standard`] driven by `cfg.m`, `cfg.n`, `cfg.standard_bound`, `cfg.seed`.
pub fn generate_standard_from(cfg: &GenConfig) -> Result<HiddenParams> {
    let mut rng = seed::substream(cfg.seed, salt::STANDARD);
    generate_standard(cfg.m, cfg.n, cfg.standard_bound, &mut rng)
}
