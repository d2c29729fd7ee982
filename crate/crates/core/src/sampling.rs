//! Exact samplers for symmetric alpha-stable variables, the alpha/2-stable
//! subordinator, uniform points on spheres and rotationally invariant stable
//! vectors.
//!
//! The derivation of the subordinator scale mapping is written out in
//! `MATH.md` at the crate root.

use std::f64::consts::{FRAC_PI_2, PI};

use rand::distr::{Distribution, Open01};
use rand::Rng;
use rand_distr::{Exp1, StandardNormal};

use crate::error::{check_alpha, domain, Result};
use crate::tolerances::SPHERE_NORM_TOL;

/// Symmetric alpha-stable law with characteristic function
/// `exp(-scale^alpha |beta|^alpha)`, sampled by Chambers–Mallows–Stuck.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetricStable {
    alpha: f64,
    scale: f64,
}

impl SymmetricStable {
    pub fn new(alpha: f64, scale: f64) -> Result<Self> {
        check_alpha(alpha)?;
        if !(scale.is_finite() && scale >= 0.0) {
            return domain(format!("scale must be finite and non-negative, got {scale}"));
        }
        Ok(Self { alpha, scale })
    }
}

impl Distribution<f64> for SymmetricStable {
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        if self.scale == 0.0 {
            return 0.0;
        }
        let u: f64 = Open01.sample(rng);
        let v = PI * (u - 0.5);
        if self.alpha == 1.0 {
            return self.scale * v.tan();
        }
        let w: f64 = Exp1.sample(rng);
        let a = self.alpha;
        let x = (a * v).sin() / v.cos().powf(1.0 / a) * (((1.0 - a) * v).cos() / w).powf((1.0 - a) / a);
        self.scale * x
    }
}

/// Increment over a time step `dt` of the subordinator with Laplace transform
/// `E[exp(-beta * l)] = exp(-dt * beta^(alpha/2))`.
///
/// This is the totally skewed Chambers–Mallows–Stuck transform at index
/// `a = alpha/2` with scale `(dt cos(pi a / 2))^(1/a)`; the cosine factors
/// cancel and what remains is Kanter's representation
/// `dt^(1/a) sin(aU) / sin(U)^(1/a) * (sin((1-a)U) / W)^((1-a)/a)`
/// with `U` uniform on `(0, pi)` and `W` standard exponential.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StableSubordinator {
    index: f64,
    time_scale: f64,
}

impl StableSubordinator {
    pub fn new(alpha: f64, dt: f64) -> Result<Self> {
        check_alpha(alpha)?;
        if !(dt.is_finite() && dt > 0.0) {
            return domain(format!("time step must be positive, got {dt}"));
        }
        let index = alpha / 2.0;
        Ok(Self {
            index,
            time_scale: dt.powf(1.0 / index),
        })
    }

    /// Index `a = alpha / 2` of the one-sided stable law.
    pub fn index(&self) -> f64 {
        self.index
    }

    /// Scale of the same law in the (stability, skewness, scale) convention
    /// whose characteristic function is
    /// `exp(-sigma^a |theta|^a (1 - i sign(theta) tan(pi a / 2)))`.
    pub fn cms_scale(alpha: f64, dt: f64) -> f64 {
        let a = alpha / 2.0;
        (dt * (FRAC_PI_2 * a).cos()).powf(1.0 / a)
    }
}

impl Distribution<f64> for StableSubordinator {
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let a = self.index;
        let u: f64 = Open01.sample(rng);
        let u = PI * u;
        let w: f64 = Exp1.sample(rng);
        let x = (a * u).sin() / u.sin().powf(1.0 / a) * (((1.0 - a) * u).sin() / w).powf((1.0 - a) / a);
        self.time_scale * x
    }
}

/// One draw of the symmetric alpha-stable law `exp(-scale^alpha |beta|^alpha)`.
pub fn sample_sas<R: Rng + ?Sized>(alpha: f64, scale: f64, rng: &mut R) -> Result<f64> {
    Ok(SymmetricStable::new(alpha, scale)?.sample(rng))
}

/// One increment `l(t + dt) - l(t)` of the alpha/2-stable subordinator with
/// Laplace exponent `beta^(alpha/2)`.
pub fn sample_subordinator_increment<R: Rng + ?Sized>(alpha: f64, dt: f64, rng: &mut R) -> Result<f64> {
    Ok(StableSubordinator::new(alpha, dt)?.sample(rng))
}

/// A point on the unit sphere of `R^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct SphereSample {
    coords: Vec<f64>,
}

impl SphereSample {
    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

/// Overwrites `out` with a uniform point on the unit sphere of `R^out.len()`.
pub(crate) fn fill_uniform_sphere<R: Rng + ?Sized>(rng: &mut R, out: &mut [f64]) {
    loop {
        let mut norm_sq = 0.0;
        for x in out.iter_mut() {
            *x = StandardNormal.sample(rng);
            norm_sq += *x * *x;
        }
        if norm_sq > 0.0 {
            let norm = norm_sq.sqrt();
            out.iter_mut().for_each(|x| *x /= norm);
            return;
        }
    }
}

/// Uniform point on `S(R^n)` as a normalized standard Gaussian vector.
pub fn sample_uniform_sphere<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<SphereSample> {
    if n == 0 {
        return domain("sphere dimension must be at least 1");
    }
    let mut coords = vec![0.0; n];
    fill_uniform_sphere(rng, &mut coords);
    debug_assert!((coords.iter().map(|x| x * x).sum::<f64>().sqrt() - 1.0).abs() <= SPHERE_NORM_TOL);
    Ok(SphereSample { coords })
}

/// Fills `out` with `sqrt(2 * dl) * Z`, the Brownian increment run for
/// subordinated time `dl`. The factor 2 turns the Laplace exponent
/// `beta^(alpha/2)` of the subordinator into the characteristic exponent
/// `|beta|^alpha`: `E exp(-dl |beta|^2) = exp(-t |beta|^alpha)`.
#[inline]
pub(crate) fn fill_subordinated_gaussian<R: Rng + ?Sized>(dl: f64, rng: &mut R, out: &mut [f64]) {
    if dl == 0.0 {
        out.iter_mut().for_each(|x| *x = 0.0);
        return;
    }
    let sd = (2.0 * dl).sqrt();
    for x in out.iter_mut() {
        let z: f64 = StandardNormal.sample(rng);
        *x = sd * z;
    }
}

/// Rotationally invariant stable vector with characteristic function
/// `exp(-t |beta|^alpha)` on `R^n`.
pub fn sample_rotational_stable<R: Rng + ?Sized>(n: usize, alpha: f64, t: f64, rng: &mut R) -> Result<Vec<f64>> {
    if n == 0 {
        return domain("dimension must be at least 1");
    }
    let sub = StableSubordinator::new(alpha, t)?;
    let dl = sub.sample(rng);
    let mut out = vec![0.0; n];
    fill_subordinated_gaussian(dl, rng, &mut out);
    Ok(out)
}
