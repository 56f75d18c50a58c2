//! Randomized single-hidden-layer feedforward networks for regression.
//!
//! Hidden sigmoid nodes are generated at random and frozen; only the linear
//! readout is fitted, by a minimum-norm least-squares solve. Two generators are
//! provided:
//!
//! * [`param_gen::generate_hidden_params`] draws each node's *slope angle*
//!   from a configurable interval, rotates the sigmoid randomly around the
//!   output axis, and shifts its inflection point onto an anchor inside the
//!   input hypercube (or onto a training point / cluster prototype).
//! * [`param_gen::generate_standard`] draws weights and biases uniformly from
//!   a fixed symmetric interval, the conventional baseline.
//!
//! The [`data`] module builds the benchmark datasets, and [`experiments`]
//! holds the cross-validation, grid-search and repeated-trial harness.

pub mod data;
pub mod error;
pub mod experiments;
pub mod matrix;
pub mod param_gen;
pub mod seed;
pub mod slfn;

pub use data::{Dataset, FoldPlan, Normalizer};
pub use error::{Error, Result};
pub use experiments::{GridReport, GridSpec, Method, TrialReport};
pub use matrix::Matrix;
pub use param_gen::{GenConfig, HiddenParams, Placement, PlacementContext};
pub use slfn::Network;
