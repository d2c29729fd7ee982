//! Shared numerical tolerances.
//!
//! Every fixed threshold used by the library and its test suites lives here so
//! that a tolerance is changed in exactly one place.

/// Relative accuracy contract of [`crate::special::log_gamma`] on `[1e-3, 1e3]`.
pub const LOG_GAMMA_REL_TOL: f64 = 1e-12;

/// Accuracy of the normalization identity `r_n * E|Y_1|^alpha = 1`.
pub const SPHERE_IDENTITY_TOL: f64 = 1e-10;

/// Accuracy of `E[Y_k^2] = 1/n` evaluated through the gamma-ratio route.
pub const SPHERE_SECOND_MOMENT_TOL: f64 = 1e-12;

/// Unit-norm tolerance for sphere samples.
pub const SPHERE_NORM_TOL: f64 = 1e-12;

/// Number of standard errors in every Monte Carlo acceptance band.
pub const MC_SIGMAS: f64 = 3.0;

/// Relative tolerance of the adaptive quadrature behind the existence integral.
pub const EXISTENCE_QUAD_REL_TOL: f64 = 1e-6;

/// Half-width of the band around the critical value `gamma = 1` of the fitted
/// singularity exponent `gamma = exponent * alpha / 2`. Fitted exponents at or
/// above `1 - CRITICAL_BAND` are classified as divergent because the integral
/// test diverges at `gamma = 1` itself.
pub const CRITICAL_BAND: f64 = 1e-3;

/// Maximum change of the local singularity exponent (times `alpha / 2`) across
/// the fit window before the verdict is declared inconclusive.
pub const EXPONENT_DRIFT_TOL: f64 = 0.05;

/// Default small-jump truncation level of the white-noise representation.
pub const DEFAULT_EPSILON: f64 = 1e-3;

/// Default spectral truncation of power-law eigenvalue models.
pub const DEFAULT_TRUNCATION: usize = 10_000;

/// Default lower end of the existence integral.
pub const DEFAULT_S_MIN: f64 = 1e-8;

/// Minimum number of samples accepted by the characteristic-function test.
pub const GOF_MIN_SAMPLES: usize = 10_000;
