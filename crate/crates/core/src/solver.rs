//! Spectral Galerkin approximation of the mild solution
//! `X(t) = T(t) x0 + int_0^t T(t - s) dL(s)` for a diagonal semigroup.

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::noise::NoisePath;
use crate::spectral::SemigroupSpec;

/// Coordinates `<X(t_i), e_k>` on a time grid, stored row-major.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Trajectory {
    time_grid: Vec<f64>,
    width: usize,
    coords: Vec<f64>,
}

impl Trajectory {
    pub fn time_grid(&self) -> &[f64] {
        &self.time_grid
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        self.time_grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.time_grid.is_empty()
    }

    /// `<X(t_i), e_k>` for `k = 1..=n`.
    pub fn state(&self, i: usize) -> &[f64] {
        &self.coords[i * self.width..(i + 1) * self.width]
    }

    pub fn initial(&self) -> &[f64] {
        self.state(0)
    }

    pub fn terminal(&self) -> &[f64] {
        self.state(self.len() - 1)
    }

    pub fn states(&self) -> impl Iterator<Item = (f64, &[f64])> {
        self.time_grid.iter().copied().zip(self.coords.chunks_exact(self.width))
    }
}

fn check_dims(spec: &SemigroupSpec, n: usize, x0: &[f64]) -> Result<()> {
    if n > spec.truncation() {
        return Err(Error::Dimension(format!(
            "{n} coordinates requested but the spectrum is truncated at {}",
            spec.truncation()
        )));
    }
    if x0.len() != n {
        return Err(Error::Dimension(format!(
            "initial state has {} coordinates, expected {n}",
            x0.len()
        )));
    }
    Ok(())
}

/// Exponential Euler on the noise grid, the increment entering at the start
/// of each step:
/// `X_k(t_{i+1}) = exp(-lambda_k dt_i) (X_k(t_i) + dL_k(i))`.
///
/// Uses the first `noise.width()` eigenvalues of `spec`.
pub fn simulate_mild_solution(spec: &SemigroupSpec, noise: &NoisePath, x0: &[f64]) -> Result<Trajectory> {
    let n = noise.width();
    check_dims(spec, n, x0)?;
    let lambdas = &spec.eigenvalues()[..n];
    let grid = noise.time_grid();
    let mut coords = Vec::with_capacity(grid.len() * n);
    coords.extend_from_slice(x0);
    let mut state = x0.to_vec();
    let mut decay = vec![0.0; n];
    let mut last_dt = f64::NAN;
    for (i, row) in noise.rows().enumerate() {
        let dt = grid[i + 1] - grid[i];
        if dt != last_dt {
            decay.iter_mut().zip(lambdas).for_each(|(d, l)| *d = (-l * dt).exp());
            last_dt = dt;
        }
        for ((x, d), dl) in state.iter_mut().zip(&decay).zip(row) {
            *x = d * (*x + dl);
        }
        coords.extend_from_slice(&state);
    }
    Ok(Trajectory {
        time_grid: grid.to_vec(),
        width: n,
        coords,
    })
}

/// Terminal state only, without storing the trajectory.
pub fn terminal_state(spec: &SemigroupSpec, noise: &NoisePath, x0: &[f64]) -> Result<Vec<f64>> {
    let n = noise.width();
    check_dims(spec, n, x0)?;
    let lambdas = &spec.eigenvalues()[..n];
    let grid = noise.time_grid();
    let mut state = x0.to_vec();
    for (i, row) in noise.rows().enumerate() {
        let dt = grid[i + 1] - grid[i];
        for ((x, l), dl) in state.iter_mut().zip(lambdas).zip(row) {
            *x = (-l * dt).exp() * (*x + dl);
        }
    }
    Ok(state)
}

/// Noise-free evolution `T(t) x0`.
pub fn evolve(spec: &SemigroupSpec, x0: &[f64], t: f64) -> Result<Vec<f64>> {
    if !(t >= 0.0) {
        return domain(format!("evolution time must be non-negative, got {t}"));
    }
    check_dims(spec, x0.len(), x0)?;
    Ok(x0
        .iter()
        .zip(spec.eigenvalues())
        .map(|(x, l)| x * (-l * t).exp())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::noise::{generate_subordinated_path, uniform_grid, Representation};
    use crate::rng::{streams, RngState};

    fn zero_noise(n: usize, steps: usize) -> NoisePath {
        let grid = uniform_grid(1.0, steps).unwrap();
        NoisePath::from_parts(Representation::Subordinated, 1.5, grid, n, vec![0.0; n * steps], None).unwrap()
    }

    #[test]
    fn zero_noise_decays() {
        let spec = SemigroupSpec::explicit(vec![1.0; 3]).unwrap();
        let traj = simulate_mild_solution(&spec, &zero_noise(3, 1000), &[1.0; 3]).unwrap();
        assert_eq!(traj.initial(), &[1.0; 3]);
        for x in traj.terminal() {
            assert!((x - (-1f64).exp()).abs() < 1e-12);
        }
    }

    #[test]
    fn undamped_solution_is_the_noise() {
        let spec = SemigroupSpec::explicit(vec![0.0; 2]).unwrap();
        let grid = uniform_grid(1.0, 50).unwrap();
        let mut rng = RngState::new(3, streams::SIMULATE).rng();
        let noise = generate_subordinated_path(2, 1.3, &grid, &mut rng).unwrap();
        let traj = simulate_mild_solution(&spec, &noise, &[0.0; 2]).unwrap();
        let mut acc = [0.0; 2];
        for (i, row) in noise.rows().enumerate() {
            acc[0] += row[0];
            acc[1] += row[1];
            assert_eq!(traj.state(i + 1), &acc);
        }
        assert_eq!(terminal_state(&spec, &noise, &[0.0; 2]).unwrap(), traj.terminal());
    }

    #[test]
    fn semigroup_property() {
        let spec = SemigroupSpec::heat(2, 8).unwrap();
        let x0 = [1.0, -2.0, 0.5, 3.0, 0.0, 1e-3, 7.0, -1.0];
        let (s, t) = (0.37, 1.21);
        let two = evolve(&spec, &evolve(&spec, &x0, s).unwrap(), t).unwrap();
        let one = evolve(&spec, &x0, s + t).unwrap();
        for (a, b) in two.iter().zip(&one) {
            assert!((a - b).abs() <= 1e-14 * a.abs().max(b.abs()), "{a} {b}");
        }
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let spec = SemigroupSpec::explicit(vec![1.0; 2]).unwrap();
        assert!(simulate_mild_solution(&spec, &zero_noise(3, 4), &[0.0; 3]).is_err());
        assert!(simulate_mild_solution(&spec, &zero_noise(2, 4), &[0.0; 3]).is_err());
    }
}
