//! Statistical checks: characteristic-function goodness of fit, tail masses
//! of the projected Lévy measures and the growth of maximal jumps with the
//! number of coordinates.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{check_alpha, domain, Error, Result};
use crate::mc::{par_chunked, par_paths};
use crate::noise::{generate_subordinated_path, uniform_grid, CharFnAccumulator, CharFnEstimate, NoisePath};
use crate::rng::RngState;
use crate::sampling::fill_uniform_sphere;
use crate::special::{c_alpha, ln_sphere_total_mass, sphere_total_mass};
use crate::tolerances::{GOF_MIN_SAMPLES, MC_SIGMAS};

/// `ln nu_n({|beta| >= c})`.
pub fn ln_levy_tail_mass(n: u64, alpha: f64, c: f64) -> Result<f64> {
    if !(c > 0.0 && c.is_finite()) {
        return domain(format!("threshold must be positive, got {c}"));
    }
    Ok(ln_sphere_total_mass(n, alpha)? - c_alpha(alpha)?.ln() - alpha * c.ln())
}

/// Mass of `{beta in R^n : |beta| >= c}` under the Lévy measure of the first
/// `n` noise coordinates, `r_n / (c_alpha c^alpha)`.
pub fn levy_tail_mass(n: u64, alpha: f64, c: f64) -> Result<f64> {
    if !(c > 0.0 && c.is_finite()) {
        return domain(format!("threshold must be positive, got {c}"));
    }
    Ok(sphere_total_mass(n, alpha)? / (c_alpha(alpha)? * c.powf(alpha)))
}

/// `P(no jump of norm above c in [0, T]) = exp(-T nu_n(|beta| > c))`,
/// evaluated in log space.
pub fn no_big_jump_probability(n: u64, alpha: f64, horizon: f64, c: f64) -> Result<f64> {
    if !(horizon >= 0.0) {
        return domain(format!("horizon must be non-negative, got {horizon}"));
    }
    if horizon == 0.0 {
        check_alpha(alpha)?;
        return Ok(1.0);
    }
    Ok((-(horizon.ln() + ln_levy_tail_mass(n, alpha, c)?).exp()).exp())
}

/// Monte Carlo estimate of the tail mass from the polar form of the Lévy
/// measure.
///
/// The spectral measure of the first `n` coordinates is uniform on the
/// sphere; its total mass is fixed by requiring that the projection on one
/// coordinate has exponent `|beta|^alpha`, i.e. mass `alpha / (c_alpha
/// E|xi_1|^alpha)`. Here `E|xi_1|^alpha` is estimated from `points` uniform
/// sphere samples and the radial integral `int_c^inf r^{-1-alpha} dr =
/// c^{-alpha} / alpha` is done exactly. Returns `(estimate, std_error)` by
/// the delta method.
pub fn tail_mass_monte_carlo(n: usize, alpha: f64, c: f64, points: usize, rng: RngState) -> Result<(f64, f64)> {
    check_alpha(alpha)?;
    if n == 0 || points < 2 {
        return domain("need n >= 1 and at least two sphere points");
    }
    if !(c > 0.0) {
        return domain(format!("threshold must be positive, got {c}"));
    }
    let parts = par_chunked(rng, points, |len, rng| {
        let mut xi = vec![0.0; n];
        let (mut s, mut s2) = (0.0, 0.0);
        for _ in 0..len {
            fill_uniform_sphere(rng, &mut xi);
            let v = xi[0].abs().powf(alpha);
            s += v;
            s2 += v * v;
        }
        (s, s2)
    });
    let (s, s2) = parts.iter().fold((0.0, 0.0), |a, b| (a.0 + b.0, a.1 + b.1));
    let np = points as f64;
    let mean = s / np;
    let se_mean = (((s2 - np * mean * mean) / (np - 1.0)).max(0.0) / np).sqrt();
    let radial = c.powf(-alpha) / alpha;
    let estimate = alpha / (c_alpha(alpha)? * mean) * radial;
    Ok((estimate, estimate * se_mean / mean))
}

/// Largest Euclidean norm of the first `n` coordinates of an increment row.
/// On a grid this over-estimates the largest jump by at most the sub-grid
/// accumulation of the smaller jumps in the same step.
pub fn max_jump(path: &NoisePath, n: usize) -> Result<f64> {
    if n == 0 || n > path.width() {
        return Err(Error::Dimension(format!(
            "{n} coordinates requested from a path of width {}",
            path.width()
        )));
    }
    Ok(path
        .rows()
        .map(|row| row[..n].iter().map(|x| x * x).sum::<f64>())
        .fold(0.0, f64::max)
        .sqrt())
}

/// [`max_jump`] for every path; all paths must share one time grid.
pub fn max_jump_statistic(paths: &[NoisePath], n: usize) -> Result<Vec<f64>> {
    if let Some(first) = paths.first() {
        if paths.iter().any(|p| p.time_grid() != first.time_grid()) {
            return domain("paths are not on a common time grid");
        }
    }
    paths.iter().map(|p| max_jump(p, n)).collect()
}

/// Band for comparing the grid statistic with the jump law: the
/// no-big-jump probability moves by at most this much when the threshold is
/// shifted by `delta = 10 dt^{1/alpha} sqrt(n)`, the size of the sub-grid
/// remainder of a step increment.
pub fn grid_bias_allowance(n: u64, alpha: f64, horizon: f64, c: f64, dt: f64) -> Result<f64> {
    if !(dt > 0.0) {
        return domain(format!("time step must be positive, got {dt}"));
    }
    let delta = 10.0 * dt.powf(1.0 / alpha) * (n as f64).sqrt();
    let hi = no_big_jump_probability(n, alpha, horizon, c + delta)?;
    let lo = if c > delta {
        no_big_jump_probability(n, alpha, horizon, c - delta)?
    } else {
        0.0
    };
    Ok(hi - lo)
}

/// Predicted and (optionally) simulated probabilities that no jump exceeds
/// each threshold, as the number of coordinates grows.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JumpGrowthReport {
    pub alpha: f64,
    #[serde(rename = "T")]
    pub horizon: f64,
    pub dims: Vec<u64>,
    pub thresholds: Vec<f64>,
    /// `[dim][threshold]`.
    pub predicted_prob: Vec<Vec<f64>>,
    pub empirical_prob: Option<Vec<Vec<f64>>>,
    pub empirical_std_error: Option<Vec<Vec<f64>>>,
    pub grid_bias: Option<Vec<Vec<f64>>>,
    pub time_step: Option<f64>,
    pub samples: usize,
}

impl JumpGrowthReport {
    /// Every predicted column is strictly decreasing in the dimension
    /// (ties allowed only once the probability has underflowed to zero or
    /// when the horizon is zero).
    pub fn predicted_decreasing(&self) -> bool {
        (0..self.thresholds.len()).all(|j| {
            self.predicted_prob
                .windows(2)
                .all(|w| w[1][j] < w[0][j] || (w[1][j] == w[0][j] && (w[0][j] == 0.0 || self.horizon == 0.0)))
        })
    }

    /// Simulated values within `MC_SIGMAS` standard errors plus grid bias of
    /// the prediction. `None` without simulated values.
    pub fn empirical_within_band(&self) -> Option<bool> {
        let (e, se, b) = (
            self.empirical_prob.as_ref()?,
            self.empirical_std_error.as_ref()?,
            self.grid_bias.as_ref()?,
        );
        Some(self.predicted_prob.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, p)| (e[i][j] - p).abs() <= MC_SIGMAS * se[i][j] + b[i][j])
        }))
    }
}

fn check_growth_args(alpha: f64, horizon: f64, thresholds: &[f64], dims: &[u64]) -> Result<()> {
    check_alpha(alpha)?;
    if dims.is_empty() {
        return domain("no dimensions requested");
    }
    if dims[0] == 0 || dims.windows(2).any(|w| w[1] <= w[0]) {
        return domain("dimensions must be positive and strictly increasing");
    }
    if thresholds.is_empty() || thresholds.iter().any(|c| !(*c > 0.0)) {
        return domain("thresholds must be positive");
    }
    if !(horizon >= 0.0 && horizon.is_finite()) {
        return domain(format!("horizon must be non-negative, got {horizon}"));
    }
    Ok(())
}

/// Tabulates `exp(-T nu_n(|beta| > c))` over `dims x thresholds`.
pub fn irregularity_growth(alpha: f64, horizon: f64, thresholds: &[f64], dims: &[u64]) -> Result<JumpGrowthReport> {
    check_growth_args(alpha, horizon, thresholds, dims)?;
    let predicted = dims
        .iter()
        .map(|&n| {
            thresholds
                .iter()
                .map(|&c| no_big_jump_probability(n, alpha, horizon, c))
                .collect()
        })
        .collect::<Result<Vec<Vec<f64>>>>()?;
    Ok(JumpGrowthReport {
        alpha,
        horizon,
        dims: dims.to_vec(),
        thresholds: thresholds.to_vec(),
        predicted_prob: predicted,
        empirical_prob: None,
        empirical_std_error: None,
        grid_bias: None,
        time_step: None,
        samples: 0,
    })
}

/// [`irregularity_growth`] together with simulated frequencies of
/// `{max_jump <= c}` from `paths` subordinated paths on a uniform grid of
/// `steps` steps. One path of the widest dimension serves every `n`.
pub fn irregularity_growth_empirical(
    alpha: f64,
    horizon: f64,
    thresholds: &[f64],
    dims: &[u64],
    steps: usize,
    paths: usize,
    rng: RngState,
) -> Result<JumpGrowthReport> {
    let mut report = irregularity_growth(alpha, horizon, thresholds, dims)?;
    if paths < 2 {
        return domain("empirical jump statistics need at least two paths");
    }
    let grid = uniform_grid(horizon, steps)?;
    let dt = horizon / steps as f64;
    let width = *dims.last().expect("checked non-empty") as usize;
    let maxima = par_paths(rng, paths, |_, rng| -> Result<Vec<f64>> {
        let path = generate_subordinated_path(width, alpha, &grid, rng)?;
        dims.iter().map(|&n| max_jump(&path, n as usize)).collect()
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let np = paths as f64;
    let mut emp = Vec::with_capacity(dims.len());
    let mut se = Vec::with_capacity(dims.len());
    let mut bias = Vec::with_capacity(dims.len());
    for (i, &n) in dims.iter().enumerate() {
        let p: Vec<f64> = thresholds
            .iter()
            .map(|&c| maxima.iter().filter(|m| m[i] <= c).count() as f64 / np)
            .collect();
        se.push(p.iter().map(|p| (p * (1.0 - p) / np).sqrt()).collect());
        bias.push(
            thresholds
                .iter()
                .map(|&c| grid_bias_allowance(n, alpha, horizon, c, dt))
                .collect::<Result<Vec<_>>>()?,
        );
        emp.push(p);
    }
    report.empirical_prob = Some(emp);
    report.empirical_std_error = Some(se);
    report.grid_bias = Some(bias);
    report.time_step = Some(dt);
    report.samples = paths;
    Ok(report)
}

/// Empirical against target characteristic function values.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CharFnReport {
    pub beta_points: Vec<Vec<f64>>,
    pub empirical: Vec<Complex64>,
    pub target: Vec<Complex64>,
    pub std_errors: Vec<f64>,
    pub bias_allowance: f64,
    pub samples: usize,
    pub pass: bool,
}

impl CharFnReport {
    /// Builds the report from precomputed estimates, e.g. streamed through
    /// [`CharFnAccumulator`]s.
    pub fn from_estimates(
        beta_points: Vec<Vec<f64>>,
        estimates: &[CharFnEstimate],
        target: Vec<Complex64>,
        bias_allowance: f64,
    ) -> Result<Self> {
        if estimates.len() != beta_points.len() || target.len() != beta_points.len() {
            return Err(Error::Dimension(format!(
                "{} frequencies, {} estimates, {} targets",
                beta_points.len(),
                estimates.len(),
                target.len()
            )));
        }
        if !(bias_allowance >= 0.0) {
            return domain(format!("bias allowance must be non-negative, got {bias_allowance}"));
        }
        let samples = estimates.iter().map(|e| e.samples).min().unwrap_or(0);
        let empirical: Vec<Complex64> = estimates.iter().map(|e| e.value).collect();
        let std_errors: Vec<f64> = estimates.iter().map(|e| e.std_error()).collect();
        let pass = empirical
            .iter()
            .zip(&target)
            .zip(&std_errors)
            .all(|((e, t), s)| (e - t).norm() <= MC_SIGMAS * s + bias_allowance);
        Ok(Self {
            beta_points,
            empirical,
            target,
            std_errors,
            bias_allowance,
            samples,
            pass,
        })
    }

    /// Largest `|empirical - target|` over the frequencies.
    pub fn max_discrepancy(&self) -> f64 {
        self.empirical
            .iter()
            .zip(&self.target)
            .map(|(e, t)| (e - t).norm())
            .fold(0.0, f64::max)
    }
}

/// Goodness of fit of `samples` (vectors in `R^n`) against target
/// characteristic function values at the given frequencies. Passes when
/// every `|empirical - target| <= 3 s.e. + bias_allowance`.
pub fn char_fn_gof<S: AsRef<[f64]> + Sync>(
    samples: &[S],
    targets: &[(Vec<f64>, Complex64)],
    bias_allowance: f64,
) -> Result<CharFnReport> {
    if samples.len() < GOF_MIN_SAMPLES {
        return domain(format!(
            "goodness of fit needs at least {GOF_MIN_SAMPLES} samples, got {}",
            samples.len()
        ));
    }
    let dim = targets.first().map(|t| t.0.len()).unwrap_or(0);
    if targets.iter().any(|t| t.0.len() != dim) || samples.iter().any(|s| s.as_ref().len() != dim) {
        return Err(Error::Dimension(
            "samples and frequencies must share one dimension".into(),
        ));
    }
    let estimates = targets
        .iter()
        .map(|(beta, _)| {
            let mut acc = CharFnAccumulator::new();
            for x in samples {
                acc.push(x.as_ref().iter().zip(beta).map(|(a, b)| a * b).sum());
            }
            acc.estimate()
        })
        .collect::<Result<Vec<_>>>()?;
    CharFnReport::from_estimates(
        targets.iter().map(|t| t.0.clone()).collect(),
        &estimates,
        targets.iter().map(|t| t.1).collect(),
        bias_allowance,
    )
}

/// Scalar form of [`char_fn_gof`].
pub fn char_fn_gof_1d(samples: &[f64], targets: &[(f64, Complex64)], bias_allowance: f64) -> Result<CharFnReport> {
    if samples.len() < GOF_MIN_SAMPLES {
        return domain(format!(
            "goodness of fit needs at least {GOF_MIN_SAMPLES} samples, got {}",
            samples.len()
        ));
    }
    let estimates = targets
        .iter()
        .map(|(beta, _)| {
            let mut acc = CharFnAccumulator::new();
            samples.iter().for_each(|x| acc.push(beta * x));
            acc.estimate()
        })
        .collect::<Result<Vec<_>>>()?;
    CharFnReport::from_estimates(
        targets.iter().map(|t| vec![t.0]).collect(),
        &estimates,
        targets.iter().map(|t| t.1).collect(),
        bias_allowance,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::noise::Representation;
    use crate::rng::streams;
    use crate::sampling::SymmetricStable;
    use rand::distr::Distribution;
    use std::f64::consts::PI;

    fn real(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn tail_mass_examples() {
        let v = levy_tail_mass(1, 1.0, 1.0).unwrap();
        assert!((v - 2.0 / PI).abs() < 1e-14);
        for a in [0.6, 1.0, 1.5] {
            let one = levy_tail_mass(7, a, 1.0).unwrap();
            let two = levy_tail_mass(7, a, 2.0).unwrap();
            assert!((two - one / 2f64.powf(a)).abs() < 1e-14 * one);
        }
        assert!(levy_tail_mass(3, 1.0, 0.0).is_err());
        assert!(levy_tail_mass(3, 1.0, -1.0).is_err());
    }

    #[test]
    fn zero_horizon_has_no_jumps() {
        let r = irregularity_growth(1.5, 0.0, &[1.0, 10.0], &[1, 10, 100]).unwrap();
        assert!(r.predicted_prob.iter().flatten().all(|p| *p == 1.0));
        assert!(r.predicted_decreasing());
    }

    #[test]
    fn predicted_decreases_with_dimension() {
        let dims: Vec<u64> = (0..12).map(|i| 1 << i).collect();
        let r = irregularity_growth(1.0, 1.0, &[1.0, 10.0, 100.0], &dims).unwrap();
        assert!(r.predicted_decreasing());
        assert!(r.predicted_prob.iter().flatten().all(|p| (0.0..=1.0).contains(p)));
        assert!(irregularity_growth(1.0, 1.0, &[1.0], &[]).is_err());
        assert!(irregularity_growth(1.0, 1.0, &[1.0], &[3, 2]).is_err());
    }

    #[test]
    fn max_jump_of_constructed_paths() {
        let grid = uniform_grid(1.0, 3).unwrap();
        let zero =
            NoisePath::from_parts(Representation::Subordinated, 1.5, grid.clone(), 2, vec![0.0; 6], None).unwrap();
        assert_eq!(max_jump(&zero, 2).unwrap(), 0.0);
        let one = NoisePath::from_parts(
            Representation::Subordinated,
            1.5,
            grid,
            3,
            vec![0.1, 0.0, 0.0, 2.0, 3.0, 6.0, 0.0, -0.2, 0.0],
            None,
        )
        .unwrap();
        assert_eq!(max_jump(&one, 3).unwrap(), 7.0);
        assert_eq!(
            max_jump_statistic(&[zero.clone(), zero.clone()], 2).unwrap(),
            vec![0.0, 0.0]
        );
        assert!(max_jump(&one, 4).is_err());
    }

    #[test]
    fn tail_mass_monte_carlo_agrees() {
        for (i, &n) in [1usize, 3, 10].iter().enumerate() {
            for a in [0.8, 1.5] {
                for c in [1.0, 5.0] {
                    let rng = RngState::new(i as u64, streams::DIAGNOSE);
                    let (est, se) = tail_mass_monte_carlo(n, a, c, 200_000, rng).unwrap();
                    let exact = levy_tail_mass(n as u64, a, c).unwrap();
                    assert!(
                        (est - exact).abs() <= 3.0 * se + 1e-12 * exact,
                        "n={n} a={a} c={c}: {est} {exact} {se}"
                    );
                }
            }
        }
    }

    fn sas(alpha: f64, count: usize, seed: u64) -> Vec<f64> {
        let d = SymmetricStable::new(alpha, 1.0).unwrap();
        let mut rng = RngState::new(seed, streams::DIAGNOSE).rng();
        (0..count).map(|_| d.sample(&mut rng)).collect()
    }

    #[test]
    fn gof_cauchy_passes() {
        let xs = sas(1.0, 200_000, 1);
        let t: Vec<(f64, Complex64)> = [0.5f64, 1.0, 2.0].iter().map(|&b| (b, real((-b).exp()))).collect();
        assert!(char_fn_gof_1d(&xs, &t, 0.0).unwrap().pass);
        // imaginary parts of a symmetric law are zero
        assert!(char_fn_gof_1d(&xs, &[(0.7, real((-0.7f64).exp()))], 0.0).unwrap().pass);
    }

    #[test]
    fn gof_zero_samples_pass() {
        let xs = vec![vec![0.0]; GOF_MIN_SAMPLES];
        let t = vec![(vec![1.0], real(1.0)), (vec![5.0], real(1.0))];
        let r = char_fn_gof(&xs, &t, 0.0).unwrap();
        assert!(r.pass);
        assert_eq!(r.max_discrepancy(), 0.0);
    }

    #[test]
    fn gof_wrong_alpha_fails() {
        let xs = sas(1.5, 1_000_000, 2);
        let r = char_fn_gof_1d(&xs, &[(2.0, real((-2f64).exp()))], 0.0).unwrap();
        assert!(!r.pass);
        assert!(r.max_discrepancy() > 0.05);
    }

    #[test]
    fn gof_rejects_small_and_mismatched() {
        assert!(char_fn_gof_1d(&[0.0; 10], &[(1.0, real(1.0))], 0.0).is_err());
        let xs = vec![vec![0.0, 0.0]; GOF_MIN_SAMPLES];
        assert!(char_fn_gof(&xs, &[(vec![1.0], real(1.0))], 0.0).is_err());
    }
}
