//! Diagonal semigroups `T*(t) e_k = exp(-lambda_k t) e_k`: the Hilbert–Schmidt
//! existence criterion, marginal scales of the stochastic convolution and
//! the two-sided bounds on the spectral integrals `I_{m,n}`.

use serde::{Deserialize, Serialize};
use statrs::function::gamma::gamma_ur;

use crate::error::{check_alpha, domain, Result};
use crate::mc::par_chunked;
use crate::quadrature::{composite_nodes, integrate};
use crate::rng::RngState;
use crate::sampling::fill_uniform_sphere;
use crate::special::{c_alpha, ln_gamma_unchecked, sphere_total_mass};
use crate::tolerances::{CRITICAL_BAND, EXISTENCE_QUAD_REL_TOL, EXPONENT_DRIFT_TOL};

/// How the eigenvalues `lambda_k` are generated.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EigenModel {
    /// `lambda_k = c_k k^exponent` with `c_k` in `[c_lo, c_hi]`.
    PowerLaw { c_lo: f64, c_hi: f64, exponent: f64 },
    /// A finite spectrum.
    Explicit { lambdas: Vec<f64> },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct RawSpec {
    model: EigenModel,
    truncation: usize,
}

/// Eigenvalue model of the generator together with the truncation `K`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawSpec", into = "RawSpec")]
pub struct SemigroupSpec {
    model: EigenModel,
    truncation: usize,
    lambdas: Vec<f64>,
}

impl TryFrom<RawSpec> for SemigroupSpec {
    type Error = crate::Error;

    fn try_from(raw: RawSpec) -> Result<Self> {
        Self::new(raw.model, raw.truncation)
    }
}

impl From<SemigroupSpec> for RawSpec {
    fn from(spec: SemigroupSpec) -> Self {
        RawSpec {
            model: spec.model,
            truncation: spec.truncation,
        }
    }
}

/// Deterministic coefficient in `[c_lo, c_hi]`; it oscillates with `k` so
/// that both ends of the band are visited.
fn band_coefficient(c_lo: f64, c_hi: f64, k: usize) -> f64 {
    if c_lo == c_hi {
        c_lo
    } else {
        c_lo + (c_hi - c_lo) * 0.5 * (1.0 + (k as f64).sin())
    }
}

impl SemigroupSpec {
    /// For `Explicit` models the truncation must equal the number of
    /// eigenvalues.
    pub fn new(model: EigenModel, truncation: usize) -> Result<Self> {
        if truncation == 0 {
            return domain("truncation must be at least 1");
        }
        let lambdas = match &model {
            EigenModel::PowerLaw { c_lo, c_hi, exponent } => {
                let (c_lo, c_hi, exponent) = (*c_lo, *c_hi, *exponent);
                if !(c_lo > 0.0 && c_lo <= c_hi && c_hi.is_finite()) {
                    return domain(format!("need 0 < c_lo <= c_hi, got [{c_lo}, {c_hi}]"));
                }
                if !(exponent > 0.0 && exponent.is_finite()) {
                    return domain(format!("power-law exponent must be positive, got {exponent}"));
                }
                (1..=truncation)
                    .map(|k| band_coefficient(c_lo, c_hi, k) * (k as f64).powf(exponent))
                    .collect()
            }
            EigenModel::Explicit { lambdas } => {
                if lambdas.is_empty() {
                    return domain("explicit spectrum is empty");
                }
                if lambdas.iter().any(|l| !(*l >= 0.0 && l.is_finite())) {
                    return domain("eigenvalues must be finite and non-negative");
                }
                if lambdas.len() != truncation {
                    return domain(format!(
                        "explicit spectrum has {} eigenvalues but truncation is {truncation}",
                        lambdas.len()
                    ));
                }
                lambdas.clone()
            }
        };
        Ok(Self {
            model,
            truncation,
            lambdas,
        })
    }

    pub fn power_law(c_lo: f64, c_hi: f64, exponent: f64, truncation: usize) -> Result<Self> {
        Self::new(EigenModel::PowerLaw { c_lo, c_hi, exponent }, truncation)
    }

    /// Dirichlet Laplacian on a `d`-dimensional domain via Weyl's law,
    /// `lambda_k = k^{2/d}`.
    pub fn heat(d: u32, truncation: usize) -> Result<Self> {
        if d == 0 {
            return domain("spatial dimension must be at least 1");
        }
        Self::power_law(1.0, 1.0, 2.0 / d as f64, truncation)
    }

    pub fn explicit(lambdas: Vec<f64>) -> Result<Self> {
        let k = lambdas.len();
        Self::new(EigenModel::Explicit { lambdas }, k)
    }

    pub fn model(&self) -> &EigenModel {
        &self.model
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// `lambda_1, ..., lambda_K`.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.lambdas
    }

    pub fn is_finite_rank(&self) -> bool {
        matches!(self.model, EigenModel::Explicit { .. })
    }
}

/// `||T(s)||_HS^2` as the midpoint of a rigorous enclosure.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HsNorm {
    pub value: f64,
    /// Width of the enclosure; the true value lies in `value +- width / 2`.
    pub width: f64,
}

impl HsNorm {
    pub fn lower(&self) -> f64 {
        self.value - 0.5 * self.width
    }

    pub fn upper(&self) -> f64 {
        self.value + 0.5 * self.width
    }
}

/// `int_{x0}^inf exp(-a x^p) dx = a^{-1/p} Gamma(1/p, a x0^p) / p`.
fn stretched_exp_tail(a: f64, p: f64, x0: f64) -> f64 {
    let q = 1.0 / p;
    let upper = gamma_ur(q, a * x0.powf(p));
    if upper == 0.0 {
        return 0.0;
    }
    (ln_gamma_unchecked(q) - q * a.ln() - p.ln() + upper.ln()).exp()
}

/// Truncated sum over `k <= K` plus an integral-test enclosure of the tail.
/// The tail is bracketed by the integrals from `K + 1` (with `c_hi`) and
/// from `K` (with `c_lo`).
pub fn hs_norm_sq(spec: &SemigroupSpec, s: f64) -> Result<HsNorm> {
    if !(s > 0.0 && s.is_finite()) {
        return domain(format!("time must be positive and finite, got {s}"));
    }
    Ok(hs_norm_sq_unchecked(spec, s))
}

fn hs_norm_sq_unchecked(spec: &SemigroupSpec, s: f64) -> HsNorm {
    let partial: f64 = spec.lambdas.iter().map(|l| (-2.0 * l * s).exp()).sum();
    match spec.model {
        EigenModel::Explicit { .. } => HsNorm {
            value: partial,
            width: 0.0,
        },
        EigenModel::PowerLaw { c_lo, c_hi, exponent } => {
            let k = spec.truncation as f64;
            let lo = stretched_exp_tail(2.0 * c_hi * s, exponent, k + 1.0);
            let hi = stretched_exp_tail(2.0 * c_lo * s, exponent, k);
            HsNorm {
                value: partial + 0.5 * (lo + hi),
                width: hi - lo,
            }
        }
    }
}

/// `int_0^inf exp(-2 a s x^{2/d}) dx = Gamma(d/2 + 1) / (2 a s)^{d/2}`, an
/// upper bound for `||T(s)||_HS^2` of a power-law model with exponent `2/d`
/// and coefficients at least `a`.
pub fn heat_hs_bound(d: u32, a: f64, s: f64) -> f64 {
    let h = d as f64 / 2.0;
    (ln_gamma_unchecked(h + 1.0) - h * (2.0 * a * s).ln()).exp()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Finite,
    Infinite,
    Inconclusive,
}

/// Outcome of the Hilbert–Schmidt existence check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExistenceReport {
    pub alpha: f64,
    #[serde(rename = "T")]
    pub horizon: f64,
    pub s_min: f64,
    pub truncation: usize,
    /// `int_{s_min}^T ||T(s)||_HS^alpha ds`.
    pub integral_value: f64,
    pub integral_abs_error: f64,
    pub integral_converged: bool,
    /// `-d log ||T(s)||_HS^2 / d log s` fitted on `[s_min, 100 s_min]`.
    pub singularity_exponent: f64,
    /// Difference between the exponents fitted on the two halves of the
    /// window.
    pub exponent_drift: f64,
    /// `singularity_exponent * alpha / 2`; the integral diverges at 0 iff
    /// this is at least 1.
    pub critical_ratio: f64,
    pub verdict: Verdict,
}

fn ls_slope(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        sxy += (a - mx) * (b - my);
        sxx += (a - mx) * (a - mx);
    }
    sxy / sxx
}

const FIT_POINTS: usize = 21;

/// Decides whether `int_0^T ||T(s)||_HS^alpha ds` is finite.
///
/// The integral over `[s_min, T]` is computed by adaptive quadrature in
/// `log s`. Near zero `||T(s)||_HS^2 ~ s^{-e}`, and the integral diverges iff
/// `e alpha / 2 >= 1`; `e` is fitted by least squares on `[s_min, 100 s_min]`.
/// Ratios within `CRITICAL_BAND` below 1 count as critical, hence Infinite.
/// If the exponents fitted on the two halves of the window differ by more
/// than `EXPONENT_DRIFT_TOL` the window is not yet asymptotic and the
/// verdict is Inconclusive.
pub fn existence_integral(spec: &SemigroupSpec, alpha: f64, horizon: f64, s_min: f64) -> Result<ExistenceReport> {
    check_alpha(alpha)?;
    if !(s_min > 0.0 && horizon.is_finite() && s_min < horizon) {
        return domain(format!("need 0 < s_min < T, got s_min = {s_min}, T = {horizon}"));
    }
    let half = alpha / 2.0;
    let quad = integrate(
        |u: f64| {
            let s = u.exp();
            hs_norm_sq_unchecked(spec, s).value.powf(half) * s
        },
        s_min.ln(),
        horizon.ln(),
        EXISTENCE_QUAD_REL_TOL,
        4000,
    )?;

    let (ls, lh): (Vec<f64>, Vec<f64>) = (0..FIT_POINTS)
        .map(|i| {
            let u = s_min.ln() + 100f64.ln() * i as f64 / (FIT_POINTS - 1) as f64;
            (u, hs_norm_sq_unchecked(spec, u.exp()).value.ln())
        })
        .unzip();
    let exponent = -ls_slope(&ls, &lh);
    let mid = FIT_POINTS / 2;
    let first = -ls_slope(&ls[..=mid], &lh[..=mid]);
    let second = -ls_slope(&ls[mid..], &lh[mid..]);
    let drift = second - first;
    let ratio = exponent * half;

    let verdict = if drift.abs() > EXPONENT_DRIFT_TOL {
        Verdict::Inconclusive
    } else if spec.is_finite_rank() || ratio < 1.0 - CRITICAL_BAND {
        Verdict::Finite
    } else {
        Verdict::Infinite
    };
    Ok(ExistenceReport {
        alpha,
        horizon,
        s_min,
        truncation: spec.truncation,
        integral_value: quad.value,
        integral_abs_error: quad.abs_error,
        integral_converged: quad.converged,
        singularity_exponent: exponent,
        exponent_drift: drift,
        critical_ratio: ratio,
        verdict,
    })
}

/// Scale of the SaS law of `int_0^t exp(-lambda (t - s)) dL(s)` for a scalar
/// noise with characteristic function `exp(-t |beta|^alpha)`:
/// `((1 - exp(-alpha lambda t)) / (alpha lambda))^{1/alpha}`.
pub fn marginal_scale(lambda: f64, alpha: f64, t: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if !(lambda >= 0.0 && lambda.is_finite()) {
        return domain(format!("eigenvalue must be non-negative, got {lambda}"));
    }
    if !(t > 0.0) {
        return domain(format!("time must be positive, got {t}"));
    }
    let x = alpha * lambda * t;
    let integral = if x == 0.0 { t } else { -(-x).exp_m1() / (alpha * lambda) };
    Ok(integral.powf(1.0 / alpha))
}

/// Exact scale of the exponential-Euler approximation of the same integral
/// on `time_grid`: `(sum_i dt_i exp(-alpha lambda (t_N - t_i)))^{1/alpha}`.
pub fn scheme_scale(lambda: f64, alpha: f64, time_grid: &[f64]) -> Result<f64> {
    check_alpha(alpha)?;
    crate::noise::validate_grid(time_grid)?;
    let t = *time_grid.last().expect("validated grid is non-empty");
    let sum: f64 = time_grid
        .windows(2)
        .map(|w| (w[1] - w[0]) * (-alpha * lambda * (t - w[0])).exp())
        .sum();
    Ok(sum.powf(1.0 / alpha))
}

/// `c_{n-m} = r_{n-m+1} / (n-m+1)^{alpha/2}` where `count = n - m + 1`.
pub fn sandwich_constant(alpha: f64, count: u64) -> Result<f64> {
    if count == 0 {
        return domain("sandwich constant needs at least one coordinate");
    }
    Ok(sphere_total_mass(count, alpha)? / (count as f64).powf(alpha / 2.0))
}

/// The spectral integral `I_{m,n}` with its deterministic bounds.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SandwichReport {
    pub alpha: f64,
    pub m: usize,
    pub n: usize,
    pub lower: f64,
    pub estimate: f64,
    pub std_error: f64,
    pub upper: f64,
    pub c_nm: f64,
    pub points: usize,
}

impl SandwichReport {
    /// `lower <= I <= upper` with `sigmas` standard errors of slack.
    pub fn ordered_within(&self, sigmas: f64) -> bool {
        let slack = sigmas * self.std_error;
        self.lower <= self.estimate + slack && self.estimate - slack <= self.upper
    }
}

/// Monte Carlo estimate of
/// `I_{m,n} = K' r_N int_0^T E[(sum_{k=m}^n exp(-2 lambda_k s) xi_k^2)^{alpha/2}] ds`
/// with `xi` uniform on the unit sphere of `R^N`, `N = n - m + 1` and
/// `K' = 2 / (c_alpha (2 - alpha))`, bracketed by `K' J` and `K' c_{n-m} J`
/// where `J = int_0^T (sum_{k=m}^n exp(-2 lambda_k s))^{alpha/2} ds`.
/// Indices `m, n` are 1-based.
pub fn sandwich_check(
    spec: &SemigroupSpec,
    alpha: f64,
    horizon: f64,
    m: usize,
    n: usize,
    mc_points: usize,
    rng: RngState,
) -> Result<SandwichReport> {
    check_alpha(alpha)?;
    if m == 0 || m > n || n > spec.truncation {
        return domain(format!(
            "need 1 <= m <= n <= K, got m = {m}, n = {n}, K = {}",
            spec.truncation
        ));
    }
    if !(horizon > 0.0 && horizon.is_finite()) {
        return domain(format!("horizon must be positive, got {horizon}"));
    }
    if mc_points < 2 {
        return domain("sandwich check needs at least two Monte Carlo points");
    }
    let lambdas = &spec.lambdas[m - 1..n];
    let count = lambdas.len();
    let half = alpha / 2.0;
    let k_prime = 2.0 / (c_alpha(alpha)? * (2.0 - alpha));
    let c_nm = sandwich_constant(alpha, count as u64)?;
    let r = sphere_total_mass(count as u64, alpha)?;

    let j = integrate(
        |s: f64| lambdas.iter().map(|l| (-2.0 * l * s).exp()).sum::<f64>().powf(half),
        0.0,
        horizon,
        1e-12,
        2000,
    )?
    .value;

    // Fixed nodes in s shared by all sphere points.
    let lmax = lambdas.iter().cloned().fold(0.0, f64::max);
    let panels = ((2.0 * lmax * horizon).ceil() as usize).clamp(16, 4096);
    let (nodes, weights) = composite_nodes(0.0, horizon, panels);
    let table: Vec<f64> = nodes
        .iter()
        .flat_map(|s| lambdas.iter().map(move |l| (-2.0 * l * s).exp()))
        .collect();

    let partials = par_chunked(rng, mc_points, |len, rng| {
        let mut xi = vec![0.0; count];
        let (mut sum, mut sum_sq) = (0.0, 0.0);
        for _ in 0..len {
            fill_uniform_sphere(rng, &mut xi);
            xi.iter_mut().for_each(|x| *x *= *x);
            let g: f64 = table
                .chunks_exact(count)
                .zip(&weights)
                .map(|(row, w)| w * row.iter().zip(&xi).map(|(e, x)| e * x).sum::<f64>().powf(half))
                .sum();
            sum += g;
            sum_sq += g * g;
        }
        (sum, sum_sq)
    });
    let (sum, sum_sq) = partials.iter().fold((0.0, 0.0), |a, b| (a.0 + b.0, a.1 + b.1));
    let npts = mc_points as f64;
    let mean = sum / npts;
    let var = ((sum_sq - npts * mean * mean) / (npts - 1.0)).max(0.0);
    let scale = k_prime * r;
    Ok(SandwichReport {
        alpha,
        m,
        n,
        lower: k_prime * j,
        estimate: scale * mean,
        std_error: scale * (var / npts).sqrt(),
        upper: k_prime * c_nm * j,
        c_nm,
        points: mc_points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::streams;

    #[test]
    fn single_zero_eigenvalue_gives_one() {
        let spec = SemigroupSpec::explicit(vec![0.0]).unwrap();
        for s in [1e-6, 0.3, 10.0] {
            assert_eq!(hs_norm_sq(&spec, s).unwrap().value, 1.0);
        }
    }

    #[test]
    fn geometric_series() {
        let spec = SemigroupSpec::power_law(1.0, 1.0, 1.0, 10_000).unwrap();
        let v = hs_norm_sq(&spec, 0.5).unwrap();
        let exact = (-1f64).exp() / (1.0 - (-1f64).exp());
        assert!((v.value - exact).abs() < 1e-12);
        // at small s the tail carries the mass and the enclosure holds it
        let s = 1e-5;
        let v = hs_norm_sq(&spec, s).unwrap();
        let exact = (-2.0 * s).exp() / -(-2.0 * s).exp_m1();
        assert!(v.lower() <= exact && exact <= v.upper(), "{v:?} vs {exact}");
        assert!(v.width <= 1.0);
    }

    #[test]
    fn nonpositive_time_rejected() {
        let spec = SemigroupSpec::heat(2, 100).unwrap();
        assert!(hs_norm_sq(&spec, 0.0).is_err());
        assert!(hs_norm_sq(&spec, -1.0).is_err());
    }

    #[test]
    fn heat_bound_holds() {
        for d in 1..=5 {
            let spec = SemigroupSpec::heat(d, 10_000).unwrap();
            for s in [1e-8, 1e-5, 1e-3, 0.1, 1.0] {
                let v = hs_norm_sq(&spec, s).unwrap();
                assert!(v.upper() <= heat_hs_bound(d, 1.0, s) * (1.0 + 1e-12), "d={d} s={s}");
            }
        }
    }

    #[test]
    fn banded_coefficients_bounded_by_c_lo() {
        let spec = SemigroupSpec::power_law(0.5, 2.0, 1.0, 1000).unwrap();
        assert!(spec.eigenvalues().iter().enumerate().all(|(i, l)| {
            let k = (i + 1) as f64;
            *l >= 0.5 * k - 1e-12 && *l <= 2.0 * k + 1e-12
        }));
        for s in [1e-6, 1e-3, 0.1] {
            let v = hs_norm_sq(&spec, s).unwrap();
            assert!(v.upper() <= heat_hs_bound(2, 0.5, s));
        }
    }

    #[test]
    fn explicit_truncation_must_match() {
        let model = EigenModel::Explicit {
            lambdas: vec![1.0, 2.0],
        };
        assert!(SemigroupSpec::new(model, 3).is_err());
        assert!(SemigroupSpec::explicit(vec![-1.0]).is_err());
        assert!(SemigroupSpec::power_law(2.0, 1.0, 1.0, 10).is_err());
    }

    #[test]
    fn heat_verdicts() {
        let d2 = SemigroupSpec::heat(2, 10_000).unwrap();
        let r = existence_integral(&d2, 1.5, 1.0, 1e-8).unwrap();
        assert_eq!(r.verdict, Verdict::Finite);
        assert!((r.singularity_exponent - 1.0).abs() < 1e-3);
        let d3 = SemigroupSpec::heat(3, 10_000).unwrap();
        let r = existence_integral(&d3, 1.5, 1.0, 1e-8).unwrap();
        assert_eq!(r.verdict, Verdict::Infinite);
        assert!((r.singularity_exponent - 1.5).abs() < 1e-3);
    }

    #[test]
    fn finite_rank_integral_bounded() {
        let spec = SemigroupSpec::explicit(vec![1.0, 2.0, 3.0]).unwrap();
        let r = existence_integral(&spec, 1.5, 1.0, 1e-8).unwrap();
        assert_eq!(r.verdict, Verdict::Finite);
        assert!(r.integral_value >= 0.0 && r.integral_value <= 3f64.powf(0.75));
    }

    #[test]
    fn s_min_must_be_below_horizon() {
        let spec = SemigroupSpec::heat(1, 10).unwrap();
        assert!(existence_integral(&spec, 1.0, 1.0, 1.0).is_err());
        assert!(existence_integral(&spec, 1.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn marginal_scale_examples() {
        for a in [0.5, 1.0, 1.7] {
            assert_eq!(marginal_scale(0.0, a, 1.0).unwrap(), 1.0);
        }
        assert!((marginal_scale(1.0, 1.0, 60.0).unwrap() - 1.0).abs() < 1e-15);
        let v = marginal_scale(2.0, 1.5, 1.0).unwrap();
        assert!((v - 0.46466).abs() < 1e-5, "{v}");
        assert!(marginal_scale(-1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn scheme_scale_converges() {
        let exact = marginal_scale(1.0, 1.2, 1.0).unwrap();
        let mut prev = f64::INFINITY;
        for steps in [10, 100, 1000, 10_000] {
            let grid = crate::noise::uniform_grid(1.0, steps).unwrap();
            let err = (scheme_scale(1.0, 1.2, &grid).unwrap() - exact).abs();
            assert!(err < prev);
            assert!(err < 1.2 / steps as f64);
            prev = err;
        }
    }

    #[test]
    fn sandwich_single_coordinate_collapses() {
        let spec = SemigroupSpec::power_law(1.0, 1.0, 1.0, 16).unwrap();
        let r = sandwich_check(&spec, 1.5, 1.0, 5, 5, 100, RngState::new(1, streams::SANDWICH)).unwrap();
        assert!((r.lower - r.upper).abs() < 1e-12);
        assert!((r.estimate - r.lower).abs() < 1e-9 * r.lower);
        assert!(r.std_error < 1e-9);
    }

    #[test]
    fn sandwich_orders_bounds() {
        let spec = SemigroupSpec::power_law(1.0, 1.0, 1.0, 16).unwrap();
        let r = sandwich_check(&spec, 1.0, 1.0, 1, 8, 20_000, RngState::new(2, streams::SANDWICH)).unwrap();
        assert!(r.ordered_within(3.0), "{r:?}");
        assert!(sandwich_check(&spec, 1.0, 1.0, 4, 3, 10, RngState::new(0, 0)).is_err());
        assert!(sandwich_check(&spec, 1.0, 1.0, 1, 17, 10, RngState::new(0, 0)).is_err());
    }

    #[test]
    fn spec_serde_round_trip() {
        let spec = SemigroupSpec::power_law(0.5, 2.0, 0.5, 100).unwrap();
        let text = serde_json::to_string(&spec).unwrap();
        let back: SemigroupSpec = serde_json::from_str(&text).unwrap();
        assert_eq!(spec, back);
        let bad = r#"{"model":{"kind":"power_law","c_lo":1.0,"c_hi":1.0,"exponent":-1.0},"truncation":5}"#;
        assert!(serde_json::from_str::<SemigroupSpec>(bad).is_err());
    }
}
