//! Simulation and statistical verification of the linear stochastic Cauchy
//! problem driven by the canonical alpha-stable cylindrical Lévy process.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod cli;
pub mod config;
pub mod diagnostics;
pub mod error;
pub mod mc;
pub mod noise;
pub mod quadrature;
pub mod rng;
pub mod sampling;
pub mod solver;
pub mod special;
pub mod spectral;
pub mod tolerances;

pub use error::{Error, Result};
pub use rng::{RngState, StreamRng};
