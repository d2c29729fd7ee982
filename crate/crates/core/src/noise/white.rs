//! Space-time Lévy white noise with symmetric alpha-stable jump intensity,
//! truncated below a jump size `epsilon`.
//!
//! Jumps form a Poisson random measure on `[0, horizon] x D x R` with
//! intensity `dt dx |y|^(-1-alpha) dy / k`, `k = 2 c_alpha / alpha`. Only jumps
//! with `|y| >= epsilon` are kept. The compensator of the retained jumps is
//! zero because the intensity is symmetric, so `L(t) 1_A` is simply the sum of
//! the magnitudes that fall in `[0, t] x A`.

use rand::distr::{Distribution, Open01};
use rand::Rng;
use rand_distr::{Poisson, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::special::StableModel;

/// Axis-aligned box `prod_i [lower_i, upper_i]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AxisBox {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl AxisBox {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.is_empty() || lower.len() != upper.len() {
            return Err(Error::Dimension(format!(
                "box corners of lengths {} and {}",
                lower.len(),
                upper.len()
            )));
        }
        if lower
            .iter()
            .zip(&upper)
            .any(|(a, b)| !(a.is_finite() && b.is_finite() && a < b))
        {
            return domain("box needs finite corners with lower < upper in every axis");
        }
        Ok(Self { lower, upper })
    }

    /// The unit cube `[0, 1]^d`.
    pub fn unit(d: usize) -> Result<Self> {
        Self::new(vec![0.0; d], vec![1.0; d])
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn volume(&self) -> f64 {
        self.lower.iter().zip(&self.upper).map(|(a, b)| b - a).product()
    }

    pub fn contains_point(&self, x: &[f64]) -> bool {
        x.len() == self.dim()
            && x.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(v, (a, b))| a <= v && v <= b)
    }

    pub fn contains_box(&self, other: &AxisBox) -> bool {
        other.dim() == self.dim()
            && self
                .lower
                .iter()
                .zip(&self.upper)
                .zip(other.lower.iter().zip(&other.upper))
                .all(|((a, b), (c, d))| a <= c && d <= b)
    }

    /// Whether the interiors intersect.
    pub fn overlaps(&self, other: &AxisBox) -> bool {
        other.dim() == self.dim()
            && self
                .lower
                .iter()
                .zip(&self.upper)
                .zip(other.lower.iter().zip(&other.upper))
                .all(|((a, b), (c, d))| a.max(*c) < b.min(*d))
    }
}

/// Mass `nu({|y| >= epsilon}) = 1 / (c_alpha epsilon^alpha)` of the jump
/// intensity per unit space-time volume.
pub fn tail_intensity(model: &StableModel, epsilon: f64) -> f64 {
    1.0 / (model.c_alpha() * epsilon.powf(model.alpha()))
}

/// Second moment `int_{|y| < epsilon} y^2 nu(dy)` of the discarded jumps per
/// unit space-time volume.
pub fn small_jump_variance(model: &StableModel, epsilon: f64) -> f64 {
    let a = model.alpha();
    2.0 * epsilon.powf(2.0 - a) / (model.white_noise_normalization() * (2.0 - a))
}

/// Upper bound on `phi_truncated(beta) - phi(beta)` for a functional with
/// space-time measure `measure` (e.g. `t * leb(A)`); the difference is always
/// non-negative. Uses `1 - cos(x) <= x^2 / 2` on the discarded jumps.
pub fn truncation_bias_bound(model: &StableModel, epsilon: f64, beta: f64, measure: f64) -> f64 {
    let target = (-measure * beta.abs().powf(model.alpha())).exp();
    let removed = measure * beta * beta * small_jump_variance(model, epsilon) / 2.0;
    target * removed.exp_m1()
}

/// Realization of the truncated Poisson random measure.
#[derive(Debug, Clone, PartialEq)]
pub struct WhiteNoiseJumpSet {
    model: StableModel,
    horizon: f64,
    epsilon: f64,
    domain: AxisBox,
    times: Vec<f64>,
    // row-major, jumps x dim
    locations: Vec<f64>,
    magnitudes: Vec<f64>,
}

/// View of one jump.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jump<'a> {
    pub time: f64,
    pub location: &'a [f64],
    pub magnitude: f64,
}

impl WhiteNoiseJumpSet {
    pub fn alpha(&self) -> f64 {
        self.model.alpha()
    }

    pub fn horizon(&self) -> f64 {
        self.horizon
    }

    pub fn truncation_epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn domain(&self) -> &AxisBox {
        &self.domain
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn jumps(&self) -> impl Iterator<Item = Jump<'_>> {
        let d = self.domain.dim();
        self.times
            .iter()
            .zip(self.locations.chunks_exact(d))
            .zip(&self.magnitudes)
            .map(|((&time, location), &magnitude)| Jump {
                time,
                location,
                magnitude,
            })
    }

    /// `L(t) 1_A`: total magnitude of the jumps in `[0, t] x A`.
    pub fn evaluate(&self, t: f64, indicator: &AxisBox) -> Result<f64> {
        if !self.domain.contains_box(indicator) {
            return domain("indicator box is not contained in the noise domain");
        }
        if !(0.0..=self.horizon).contains(&t) {
            return domain(format!("time {t} outside [0, {}]", self.horizon));
        }
        Ok(self
            .jumps()
            .filter(|j| j.time <= t && indicator.contains_point(j.location))
            .map(|j| j.magnitude)
            .sum())
    }

    /// [`Self::evaluate`] plus a centred Gaussian carrying the variance of the
    /// discarded small jumps. The Gaussian is drawn afresh for each call, so
    /// this is only valid for the law of a single functional.
    pub fn evaluate_refined<R: Rng + ?Sized>(&self, t: f64, indicator: &AxisBox, rng: &mut R) -> Result<f64> {
        let jumps = self.evaluate(t, indicator)?;
        let var = small_jump_variance(&self.model, self.epsilon) * t * indicator.volume();
        let z: f64 = StandardNormal.sample(rng);
        Ok(jumps + var.sqrt() * z)
    }

    /// Truncation bias bound for `L(t) 1_A` at frequency `beta`.
    pub fn bias_bound(&self, t: f64, indicator: &AxisBox, beta: f64) -> f64 {
        truncation_bias_bound(&self.model, self.epsilon, beta, t * indicator.volume())
    }
}

/// Samples the jumps of the truncated white noise on
/// `[0, horizon] x domain_box x {|y| >= epsilon}`.
pub fn generate_white_noise_jumps<R: Rng + ?Sized>(
    domain_box: &AxisBox,
    alpha: f64,
    horizon: f64,
    epsilon: f64,
    rng: &mut R,
) -> Result<WhiteNoiseJumpSet> {
    if !(alpha > 1.0 && alpha < 2.0) {
        return domain(format!("white-noise representation needs alpha in (1, 2), got {alpha}"));
    }
    if !(epsilon.is_finite() && epsilon > 0.0) {
        return domain(format!("truncation level must be positive, got {epsilon}"));
    }
    if !(horizon.is_finite() && horizon > 0.0) {
        return domain(format!("horizon must be positive, got {horizon}"));
    }
    let model = StableModel::new(alpha)?;
    let mean = horizon * domain_box.volume() * tail_intensity(&model, epsilon);
    let count = Poisson::new(mean)
        .map_err(|e| Error::Domain(format!("jump count intensity {mean}: {e}")))?
        .sample(rng) as usize;

    let d = domain_box.dim();
    let mut times = Vec::with_capacity(count);
    let mut locations = Vec::with_capacity(count * d);
    let mut magnitudes = Vec::with_capacity(count);
    let inv_alpha = -1.0 / alpha;
    for _ in 0..count {
        times.push(horizon * rng.random::<f64>());
        for (a, b) in domain_box.lower.iter().zip(&domain_box.upper) {
            locations.push(a + (b - a) * rng.random::<f64>());
        }
        // Pareto tail: P(|y| > r) = (epsilon / r)^alpha for r >= epsilon
        let u: f64 = Open01.sample(rng);
        let size = epsilon * u.powf(inv_alpha);
        magnitudes.push(if rng.random::<bool>() { size } else { -size });
    }
    Ok(WhiteNoiseJumpSet {
        model,
        horizon,
        epsilon,
        domain: domain_box.clone(),
        times,
        locations,
        magnitudes,
    })
}

/// `L(t) 1_A = Y([0, t] x A)` for a sampled jump set.
pub fn evaluate_white_noise(jumps: &WhiteNoiseJumpSet, t: f64, indicator_box: &AxisBox) -> Result<f64> {
    jumps.evaluate(t, indicator_box)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::RngState;

    #[test]
    fn tail_intensity_closed_form() {
        let m = StableModel::new(1.5).unwrap();
        // 2 / (k alpha eps^alpha) with k = 2 c_alpha / alpha
        let k = m.white_noise_normalization();
        let direct = 2.0 / (k * 1.5);
        assert!((tail_intensity(&m, 1.0) - direct).abs() < 1e-14);
        assert!((tail_intensity(&m, 1.0) - 0.398_942_280_401_432_7).abs() < 1e-12);
        assert!((tail_intensity(&m, 0.5) - tail_intensity(&m, 1.0) * 0.5f64.powf(-1.5)).abs() < 1e-12);
    }

    #[test]
    fn tail_intensity_matches_density_integral() {
        // integrate 2 * |y|^(-1-alpha) / k over [eps, inf) by the midpoint rule in log space
        let m = StableModel::new(1.3).unwrap();
        let k = m.white_noise_normalization();
        let eps: f64 = 0.2;
        let (lo, hi, n) = (eps.ln(), 60.0f64, 200_000);
        let h = (hi - lo) / n as f64;
        let mut acc = 0.0;
        for i in 0..n {
            let u = lo + (i as f64 + 0.5) * h;
            let y = u.exp();
            acc += 2.0 * y.powf(-1.3) / k * h;
        }
        assert!((acc / tail_intensity(&m, eps) - 1.0).abs() < 1e-6);
    }

    #[test]
    fn box_geometry() {
        let b = AxisBox::new(vec![0.0, -1.0], vec![2.0, 1.0]).unwrap();
        assert_eq!(b.volume(), 4.0);
        assert!(b.contains_point(&[1.0, 0.0]));
        assert!(!b.contains_point(&[3.0, 0.0]));
        let inner = AxisBox::new(vec![0.5, 0.0], vec![1.0, 1.0]).unwrap();
        assert!(b.contains_box(&inner));
        assert!(!inner.contains_box(&b));
        let c = AxisBox::new(vec![1.0, -1.0], vec![2.0, 1.0]).unwrap();
        let d = AxisBox::new(vec![0.0, -1.0], vec![1.0, 1.0]).unwrap();
        assert!(!c.overlaps(&d));
        assert!(b.overlaps(&c));
        assert!(AxisBox::new(vec![1.0], vec![1.0]).is_err());
        assert!(AxisBox::new(vec![0.0], vec![1.0, 2.0]).is_err());
    }

    #[test]
    fn generation_errors() {
        let mut rng = RngState::new(1, 0).rng();
        let b = AxisBox::unit(1).unwrap();
        assert!(generate_white_noise_jumps(&b, 1.5, 1.0, 0.0, &mut rng).is_err());
        assert!(generate_white_noise_jumps(&b, 0.9, 1.0, 0.1, &mut rng).is_err());
        assert!(generate_white_noise_jumps(&b, 2.0, 1.0, 0.1, &mut rng).is_err());
        assert!(generate_white_noise_jumps(&b, 1.5, 0.0, 0.1, &mut rng).is_err());
    }

    #[test]
    fn jump_set_invariants() {
        let mut rng = RngState::new(2, 0).rng();
        let b = AxisBox::new(vec![0.0, 0.0], vec![2.0, 0.5]).unwrap();
        let set = generate_white_noise_jumps(&b, 1.4, 3.0, 0.05, &mut rng).unwrap();
        assert!(!set.is_empty());
        for j in set.jumps() {
            assert!(j.magnitude.abs() >= 0.05);
            assert!((0.0..=3.0).contains(&j.time));
            assert!(b.contains_point(j.location));
        }
    }

    #[test]
    fn evaluation_rules() {
        let mut rng = RngState::new(3, 0).rng();
        let b = AxisBox::unit(1).unwrap();
        let set = generate_white_noise_jumps(&b, 1.5, 1.0, 0.1, &mut rng).unwrap();
        let outside = AxisBox::new(vec![0.5], vec![1.5]).unwrap();
        assert!(set.evaluate(1.0, &outside).is_err());
        assert!(set.evaluate(1.5, &b).is_err());
        assert_eq!(set.evaluate(0.0, &b).unwrap(), 0.0);
        let total: f64 = set.jumps().map(|j| j.magnitude).sum();
        assert_eq!(set.evaluate(1.0, &b).unwrap(), total);
        // additivity over a split of the domain
        let left = AxisBox::new(vec![0.0], vec![0.5]).unwrap();
        let right = AxisBox::new(vec![0.5], vec![1.0]).unwrap();
        let split = set.evaluate(1.0, &left).unwrap() + set.evaluate(1.0, &right).unwrap();
        assert!((split - total).abs() < 1e-9 * total.abs().max(1.0));
    }

    #[test]
    fn empty_set_evaluates_to_zero() {
        let mut rng = RngState::new(4, 0).rng();
        let b = AxisBox::unit(1).unwrap();
        // mean count 1e-9: empty with overwhelming probability
        let set = generate_white_noise_jumps(
            &b,
            1.5,
            1e-9 / tail_intensity(&StableModel::new(1.5).unwrap(), 1.0),
            1.0,
            &mut rng,
        )
        .unwrap();
        assert!(set.is_empty());
        assert_eq!(set.evaluate(set.horizon(), &b).unwrap(), 0.0);
    }

    #[test]
    fn mean_jump_count() {
        let b = AxisBox::new(vec![0.0], vec![2.0]).unwrap();
        let (alpha, eps, horizon) = (1.5, 0.5, 1.5);
        let expected = horizon * 2.0 * tail_intensity(&StableModel::new(alpha).unwrap(), eps);
        let n = 10_000;
        let counts: Vec<f64> = (0..n)
            .map(|i| {
                let mut rng = RngState::new(5, i).rng();
                generate_white_noise_jumps(&b, alpha, horizon, eps, &mut rng)
                    .unwrap()
                    .len() as f64
            })
            .collect();
        let mean = counts.iter().sum::<f64>() / n as f64;
        let se = (expected / n as f64).sqrt();
        assert!((mean - expected).abs() < 3.0 * se, "{mean} vs {expected}");
    }

    #[test]
    fn bias_bound_is_small_at_default_epsilon() {
        let m = StableModel::new(1.5).unwrap();
        for beta in [0.5, 1.0, 2.0] {
            let b = truncation_bias_bound(&m, 1e-3, beta, 1.0);
            assert!(b > 0.0 && b < 0.01, "beta {beta}: {b}");
        }
    }

    #[test]
    fn refined_evaluation_adds_variance() {
        let mut rng = RngState::new(6, 0).rng();
        let b = AxisBox::unit(1).unwrap();
        let set = generate_white_noise_jumps(&b, 1.5, 1.0, 0.5, &mut rng).unwrap();
        let plain = set.evaluate(1.0, &b).unwrap();
        let refined = set.evaluate_refined(1.0, &b, &mut rng).unwrap();
        assert_ne!(plain, refined);
    }
}
