//! Single-hidden-layer network: hidden-layer evaluation, least-squares
//! readout, prediction.

use faer::dyn_stack::{MemBuffer, MemStack};
use faer::linalg::matmul::matmul;
use faer::linalg::svd::{self, ComputeSvdVectors};
use faer::diag::Diag;
use faer::{Accum, Col, ColRef, Mat, Par};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{dot, dot_compensated, Matrix};
use crate::param_gen::HiddenParams;

/// Logistic sigmoid, evaluated so that `exp` never overflows.
#[inline]
pub fn sigmoid(z: f64) -> f64 {
    if z >= 0.0 {
        1.0 / (1.0 + (-z).exp())
    } else {
        let e = z.exp();
        e / (1.0 + e)
    }
}

/// Hidden-layer output matrix `H`, `N × m`: entry `(l, i)` is node `i`'s
/// output at sample `l`.
#[derive(Debug, Clone, PartialEq)]
pub struct HiddenMatrix(Matrix);

impl HiddenMatrix {
    pub fn as_matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    /// Wraps an arbitrary matrix, e.g. for solving a least-squares problem
    /// that did not come from a network.
    pub fn from_matrix(m: Matrix) -> Self {
        HiddenMatrix(m)
    }
}

pub fn hidden_matrix(x: &Matrix, params: &HiddenParams) -> Result<HiddenMatrix> {
    if x.cols() != params.dim() {
        return Err(Error::usage(format!(
            "inputs have {} columns, hidden layer expects {}",
            x.cols(),
            params.dim()
        )));
    }
    let m = params.nodes();
    let mut h = Matrix::zeros(x.rows(), m);
    if m > 0 {
        h.as_mut_slice()
            .par_chunks_mut(m)
            .zip(x.as_slice().par_chunks(x.cols().max(1)))
            .for_each(|(out, xl)| {
                for (i, o) in out.iter_mut().enumerate() {
                    *o = sigmoid(dot(params.weights.row(i), xl) + params.biases[i]);
                }
            });
    }
    Ok(HiddenMatrix(h))
}

/// Relative singular-value cutoff used by [`fit_output_weights`].
pub fn default_rcond(rows: usize, cols: usize) -> f64 {
    f64::EPSILON * rows.max(cols) as f64
}

const REFINE_STEPS: usize = 2;

/// Minimum-norm least-squares output weights `β = H⁺ y`.
///
/// `H⁺` is the Moore-Penrose pseudo-inverse computed from a thin SVD;
/// singular values below `rcond · σ_max` are treated as zero, with `rcond`
/// from [`default_rcond`].
pub fn fit_output_weights(h: &HiddenMatrix, y: &[f64]) -> Result<Vec<f64>> {
    let (rows, cols) = h.0.shape();
    fit_output_weights_with(h, y, default_rcond(rows, cols))
}

/// [`fit_output_weights`] with an explicit relative singular-value cutoff.
pub fn fit_output_weights_with(h: &HiddenMatrix, y: &[f64], rcond: f64) -> Result<Vec<f64>> {
    let h = &h.0;
    let (rows, cols) = h.shape();
    if rows != y.len() {
        return Err(Error::usage(format!(
            "hidden matrix has {rows} rows but {} targets were given",
            y.len()
        )));
    }
    if rows == 0 || cols == 0 {
        return Err(Error::usage("least-squares problem is empty"));
    }
    if !h.is_finite() || !y.iter().all(|v| v.is_finite()) {
        return Err(Error::data("non-finite value in hidden matrix or targets"));
    }

    // Sequential on purpose: faer's parallel kernels reduce in an order that
    // depends on the pool size, and callers already parallelize across fits.
    let par = Par::Seq;
    let a = Mat::<f64>::from_fn(rows, cols, |i, j| h.get(i, j));
    let k = rows.min(cols);
    let mut u = Mat::<f64>::zeros(rows, k);
    let mut v = Mat::<f64>::zeros(cols, k);
    let mut s = Diag::<f64>::zeros(k);
    let scratch = svd::svd_scratch::<f64>(
        rows,
        cols,
        ComputeSvdVectors::Thin,
        ComputeSvdVectors::Thin,
        par,
        Default::default(),
    );
    svd::svd(
        a.as_ref(),
        s.as_mut(),
        Some(u.as_mut()),
        Some(v.as_mut()),
        par,
        MemStack::new(&mut MemBuffer::new(scratch)),
        Default::default(),
    )
    .map_err(|e| Error::data(format!("SVD did not converge: {e:?}")))?;
    let s = s.column_vector();

    let sigma_max = (0..k).map(|i| s[i]).fold(0.0f64, f64::max);
    let cutoff = rcond * sigma_max;

    // β += V Σ⁺ Uᵀ r
    let mut coef = Col::<f64>::zeros(k);
    let mut step = Col::<f64>::zeros(cols);
    let mut apply_pinv = |r: &[f64], beta: &mut [f64]| {
        matmul(&mut coef, Accum::Replace, u.transpose(), ColRef::from_slice(r), 1.0, par);
        for j in 0..k {
            coef[j] = if s[j] > cutoff { coef[j] / s[j] } else { 0.0 };
        }
        matmul(&mut step, Accum::Replace, &v, &coef, 1.0, par);
        for (i, b) in beta.iter_mut().enumerate() {
            *b += step[i];
        }
    };

    let mut beta = vec![0.0; cols];
    apply_pinv(y, &mut beta);
    // Flat or steep nodes make ‖β‖ huge, and plain evaluation of Hβ then
    // loses about eps·‖β‖₁ per entry; refine against accurate residuals.
    for _ in 0..REFINE_STEPS {
        let resid: Vec<f64> = h
            .row_iter()
            .zip(y)
            .map(|(row, &yl)| yl - dot_compensated(row, &beta))
            .collect();
        apply_pinv(&resid, &mut beta);
    }
    Ok(beta)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Network {
    pub hidden: HiddenParams,
    pub beta: Vec<f64>,
    pub fitted: bool,
}

impl Network {
    pub fn new(hidden: HiddenParams) -> Self {
        Network {
            hidden,
            beta: Vec::new(),
            fitted: false,
        }
    }

    /// Network with the given output weights, marked fitted.
    pub fn with_beta(hidden: HiddenParams, beta: Vec<f64>) -> Result<Self> {
        if beta.len() != hidden.nodes() {
            return Err(Error::usage(format!(
                "{} output weights for {} hidden nodes",
                beta.len(),
                hidden.nodes()
            )));
        }
        Ok(Network {
            hidden,
            beta,
            fitted: true,
        })
    }

    /// Fits the readout on `(x, y)`.
    pub fn fit(hidden: HiddenParams, x: &Matrix, y: &[f64]) -> Result<Self> {
        let h = hidden_matrix(x, &hidden)?;
        let beta = fit_output_weights(&h, y)?;
        Network::with_beta(hidden, beta)
    }

    pub fn predict(&self, x: &Matrix) -> Result<Vec<f64>> {
        if !self.fitted {
            return Err(Error::NotFitted);
        }
        hidden_matrix(x, &self.hidden)?.0.mul_vec(&self.beta)
    }
}

pub fn predict(net: &Network, x: &Matrix) -> Result<Vec<f64>> {
    net.predict(x)
}

pub fn rmse(y_hat: &[f64], y: &[f64]) -> Result<f64> {
    if y_hat.len() != y.len() {
        return Err(Error::usage(format!(
            "prediction length {} differs from target length {}",
            y_hat.len(),
            y.len()
        )));
    }
    if y.is_empty() {
        return Err(Error::usage("RMSE of an empty set"));
    }
    let sse: f64 = y_hat.iter().zip(y).map(|(a, b)| (a - b) * (a - b)).sum();
    Ok((sse / y.len() as f64).sqrt())
}
