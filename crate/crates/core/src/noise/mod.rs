//! Discretized paths of the first `n` coordinates `<L(t), e_k>` of the
//! canonical alpha-stable cylindrical Lévy process.
//!
//! Two constructions are provided. The subordinated one runs a common
//! Brownian motion on the clock of an alpha/2-stable subordinator, which is
//! what couples the coordinates. The white-noise one scatters Poisson jumps
//! over space-time (see [`white`]).

mod charfn;
pub mod white;

use rand::distr::Distribution;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{check_alpha, domain, Error, Result};
use crate::sampling::{fill_subordinated_gaussian, StableSubordinator};

pub use charfn::{empirical_char_fn, empirical_char_fn_1d, CharFnAccumulator, CharFnEstimate};
pub use white::{evaluate_white_noise, generate_white_noise_jumps, AxisBox, WhiteNoiseJumpSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Representation {
    Subordinated,
    WhiteNoise,
}

/// Checks that `grid` starts at zero and is strictly increasing with at least
/// one step.
pub fn validate_grid(grid: &[f64]) -> Result<()> {
    if grid.len() < 2 {
        return domain("time grid needs at least two points");
    }
    if grid[0] != 0.0 {
        return domain(format!("time grid must start at 0, starts at {}", grid[0]));
    }
    for w in grid.windows(2) {
        if !(w[1] > w[0]) || !w[1].is_finite() {
            return domain(format!("time grid not strictly increasing at {} -> {}", w[0], w[1]));
        }
    }
    Ok(())
}

/// `steps + 1` equally spaced points on `[0, horizon]`.
pub fn uniform_grid(horizon: f64, steps: usize) -> Result<Vec<f64>> {
    if !(horizon.is_finite() && horizon > 0.0) || steps == 0 {
        return domain(format!(
            "uniform grid needs horizon > 0 and steps >= 1, got {horizon}, {steps}"
        ));
    }
    let mut grid: Vec<f64> = (0..=steps).map(|i| horizon * i as f64 / steps as f64).collect();
    grid[steps] = horizon;
    Ok(grid)
}

/// Increments of the first `n` noise coordinates over a time grid.
#[derive(Debug, Clone, PartialEq)]
pub struct NoisePath {
    representation: Representation,
    alpha: f64,
    time_grid: Vec<f64>,
    width: usize,
    // row-major, (time_grid.len() - 1) x width
    increments: Vec<f64>,
    subordinator_increments: Option<Vec<f64>>,
}

impl NoisePath {
    /// Assembles a path from raw parts, checking every structural invariant.
    pub fn from_parts(
        representation: Representation,
        alpha: f64,
        time_grid: Vec<f64>,
        width: usize,
        increments: Vec<f64>,
        subordinator_increments: Option<Vec<f64>>,
    ) -> Result<Self> {
        check_alpha(alpha)?;
        validate_grid(&time_grid)?;
        if width == 0 {
            return domain("noise path needs at least one coordinate");
        }
        let steps = time_grid.len() - 1;
        if increments.len() != steps * width {
            return Err(Error::Dimension(format!(
                "{} increments for {steps} steps of width {width}",
                increments.len()
            )));
        }
        if let Some(sub) = &subordinator_increments {
            if representation != Representation::Subordinated {
                return domain("subordinator increments only exist for the subordinated representation");
            }
            if sub.len() != steps {
                return Err(Error::Dimension(format!(
                    "{} subordinator increments for {steps} steps",
                    sub.len()
                )));
            }
            if sub.iter().any(|x| !(*x >= 0.0)) {
                return domain("subordinator increments must be non-negative");
            }
        }
        Ok(Self {
            representation,
            alpha,
            time_grid,
            width,
            increments,
            subordinator_increments,
        })
    }

    pub fn representation(&self) -> Representation {
        self.representation
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn time_grid(&self) -> &[f64] {
        &self.time_grid
    }

    pub fn steps(&self) -> usize {
        self.time_grid.len() - 1
    }

    /// Number of coordinates `n`.
    pub fn width(&self) -> usize {
        self.width
    }

    /// Coordinate increments over step `i`, i.e. over `[t_i, t_{i+1}]`.
    pub fn row(&self, i: usize) -> &[f64] {
        &self.increments[i * self.width..(i + 1) * self.width]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.increments.chunks_exact(self.width)
    }

    pub fn subordinator_increments(&self) -> Option<&[f64]> {
        self.subordinator_increments.as_deref()
    }

    /// `L(T) e_k` for every coordinate, the sum of all increments.
    pub fn terminal_values(&self) -> Vec<f64> {
        let mut total = vec![0.0; self.width];
        for row in self.rows() {
            total.iter_mut().zip(row).for_each(|(t, x)| *t += x);
        }
        total
    }

    /// Merges every `factor` consecutive steps into one. The result is an
    /// exact sample of the same noise on the coarser grid.
    pub fn coarsen(&self, factor: usize) -> Result<Self> {
        if factor == 0 || !self.steps().is_multiple_of(factor) {
            return domain(format!("cannot coarsen {} steps by a factor of {factor}", self.steps()));
        }
        let steps = self.steps() / factor;
        let grid: Vec<f64> = (0..=steps).map(|i| self.time_grid[i * factor]).collect();
        let mut inc = vec![0.0; steps * self.width];
        for (i, row) in self.rows().enumerate() {
            let j = i / factor;
            inc[j * self.width..(j + 1) * self.width]
                .iter_mut()
                .zip(row)
                .for_each(|(a, b)| *a += b);
        }
        let sub = self
            .subordinator_increments
            .as_ref()
            .map(|s| s.chunks_exact(factor).map(|c| c.iter().sum()).collect());
        Self::from_parts(self.representation, self.alpha, grid, self.width, inc, sub)
    }
}

/// Subordinated path of the first `n` coordinates over `time_grid`.
///
/// Each step draws one subordinator increment `dl` for the step length and
/// then `n` independent centred Gaussians of variance `2 dl`. The summed
/// increment over `[0, t]` has characteristic function `exp(-t |beta|^alpha)`
/// on `R^n`; the shared `dl` is what makes the coordinates dependent.
pub fn generate_subordinated_path<R: Rng + ?Sized>(
    n: usize,
    alpha: f64,
    time_grid: &[f64],
    rng: &mut R,
) -> Result<NoisePath> {
    check_alpha(alpha)?;
    validate_grid(time_grid)?;
    if n == 0 {
        return domain("noise path needs at least one coordinate");
    }
    let steps = time_grid.len() - 1;
    let mut increments = vec![0.0; steps * n];
    let mut subordinator = Vec::with_capacity(steps);
    let mut cached: Option<(f64, StableSubordinator)> = None;
    for (i, row) in increments.chunks_exact_mut(n).enumerate() {
        let dt = time_grid[i + 1] - time_grid[i];
        let law = match cached {
            Some((h, law)) if h == dt => law,
            _ => {
                let law = StableSubordinator::new(alpha, dt)?;
                cached = Some((dt, law));
                law
            }
        };
        let dl = law.sample(rng);
        fill_subordinated_gaussian(dl, rng, row);
        subordinator.push(dl);
    }
    NoisePath::from_parts(
        Representation::Subordinated,
        alpha,
        time_grid.to_vec(),
        n,
        increments,
        Some(subordinator),
    )
}
