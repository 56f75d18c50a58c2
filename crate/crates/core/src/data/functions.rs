use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `sin(20·eˣ)·x²`; oscillation frequency grows along `[0, 1]`.
pub fn tf_sine_exp_1d(x: f64) -> f64 {
    (20.0 * x.exp()).sin() * x * x
}

/// Three Gaussian bumps centred at 0.4, 0.5 and 0.25; the last two are
/// narrow (width ~1/80).
pub fn tf_three_gaussians_1d(x: f64) -> f64 {
    let bump = |s: f64| (-(s * s)).exp();
    0.2 * bump(10.0 * x - 4.0) + 0.5 * bump(80.0 * x - 40.0) + 0.3 * bump(80.0 * x - 20.0)
}

pub fn tf_sine_exp_2d(x1: f64, x2: f64) -> f64 {
    tf_sine_exp_1d(x1) + tf_sine_exp_1d(x2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TargetFunction {
    SineExp1d,
    ThreeGauss1d,
    SineExp2d,
}

impl TargetFunction {
    pub fn dim(self) -> usize {
        match self {
            TargetFunction::SineExp1d | TargetFunction::ThreeGauss1d => 1,
            TargetFunction::SineExp2d => 2,
        }
    }

    pub fn eval(self, x: &[f64]) -> f64 {
        match self {
            TargetFunction::SineExp1d => tf_sine_exp_1d(x[0]),
            TargetFunction::ThreeGauss1d => tf_three_gaussians_1d(x[0]),
            TargetFunction::SineExp2d => tf_sine_exp_2d(x[0], x[1]),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            TargetFunction::SineExp1d => "sine-exp-1d",
            TargetFunction::ThreeGauss1d => "three-gauss-1d",
            TargetFunction::SineExp2d => "sine-exp-2d",
        }
    }
}

impl std::str::FromStr for TargetFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sine-exp-1d" => Ok(TargetFunction::SineExp1d),
            "three-gauss-1d" => Ok(TargetFunction::ThreeGauss1d),
            "sine-exp-2d" => Ok(TargetFunction::SineExp2d),
            other => Err(Error::usage(format!("unknown target function `{other}`"))),
        }
    }
}
