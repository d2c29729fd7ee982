use num_complex::Complex64;
use serde::Serialize;

use crate::error::{domain, Error, Result};

/// Sample mean of `exp(i <beta, X>)` together with the standard errors of its
/// real and imaginary parts.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CharFnEstimate {
    pub value: Complex64,
    pub se_re: f64,
    pub se_im: f64,
    pub samples: usize,
}

impl CharFnEstimate {
    /// Standard error of the complex estimate, `sqrt(se_re^2 + se_im^2)`.
    pub fn std_error(&self) -> f64 {
        self.se_re.hypot(self.se_im)
    }
}

/// Streaming accumulator of `cos` and `sin` moments of a phase.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CharFnAccumulator {
    n: usize,
    cos: f64,
    cos2: f64,
    sin: f64,
    sin2: f64,
}

impl CharFnAccumulator {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds one observation of the phase `<beta, X>`.
    #[inline]
    pub fn push(&mut self, phase: f64) {
        let (s, c) = phase.sin_cos();
        self.n += 1;
        self.cos += c;
        self.cos2 += c * c;
        self.sin += s;
        self.sin2 += s * s;
    }

    pub fn merge(&mut self, other: &Self) {
        self.n += other.n;
        self.cos += other.cos;
        self.cos2 += other.cos2;
        self.sin += other.sin;
        self.sin2 += other.sin2;
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn estimate(&self) -> Result<CharFnEstimate> {
        if self.n == 0 {
            return domain("characteristic function of an empty sample");
        }
        let n = self.n as f64;
        let re = self.cos / n;
        let im = self.sin / n;
        let var_re = (self.cos2 / n - re * re).max(0.0);
        let var_im = (self.sin2 / n - im * im).max(0.0);
        Ok(CharFnEstimate {
            value: Complex64::new(re, im),
            se_re: (var_re / n).sqrt(),
            se_im: (var_im / n).sqrt(),
            samples: self.n,
        })
    }
}

/// Empirical characteristic function `(1/N) sum_j exp(i <beta, X_j>)`.
pub fn empirical_char_fn<S: AsRef<[f64]>>(samples: &[S], beta: &[f64]) -> Result<CharFnEstimate> {
    if samples.is_empty() {
        return domain("characteristic function of an empty sample");
    }
    let mut acc = CharFnAccumulator::new();
    for x in samples {
        let x = x.as_ref();
        if x.len() != beta.len() {
            return Err(Error::Dimension(format!(
                "sample of length {} against frequency of length {}",
                x.len(),
                beta.len()
            )));
        }
        acc.push(x.iter().zip(beta).map(|(a, b)| a * b).sum());
    }
    acc.estimate()
}

/// One-dimensional convenience form of [`empirical_char_fn`].
pub fn empirical_char_fn_1d(samples: &[f64], beta: f64) -> Result<CharFnEstimate> {
    let mut acc = CharFnAccumulator::new();
    samples.iter().for_each(|x| acc.push(beta * x));
    acc.estimate()
}
