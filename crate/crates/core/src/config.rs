//! Experiment configuration: TOML on disk, validated on load, hashed for the
//! run manifest.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::noise::Representation;
use crate::spectral::{EigenModel, SemigroupSpec};
use crate::tolerances::{DEFAULT_EPSILON, DEFAULT_S_MIN, DEFAULT_TRUNCATION};

pub const SCHEMA_VERSION: u32 = 1;

fn default_s_min() -> f64 {
    DEFAULT_S_MIN
}

fn default_epsilon() -> f64 {
    DEFAULT_EPSILON
}

fn default_space_dim() -> usize {
    1
}

/// One experiment. Field names are the TOML keys.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub schema_version: u32,
    pub alpha: f64,
    pub semigroup: SemigroupSpec,
    /// Time horizon `T`.
    pub horizon: f64,
    /// Time step of the uniform simulation grid.
    pub dt: f64,
    /// Number of Galerkin coordinates `n`.
    pub galerkin_n: usize,
    pub paths: usize,
    pub seed: u64,
    pub output_dir: PathBuf,
    pub representation: Representation,
    /// Lower end of the existence-check window.
    #[serde(default = "default_s_min")]
    pub s_min: f64,
    /// Jump truncation of the white-noise representation.
    #[serde(default = "default_epsilon")]
    pub epsilon: f64,
    /// Spatial dimension of the white-noise domain `[0, 1]^d`.
    #[serde(default = "default_space_dim")]
    pub space_dim: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            alpha: 1.5,
            semigroup: SemigroupSpec::heat(2, DEFAULT_TRUNCATION).expect("valid default"),
            horizon: 1.0,
            dt: 1e-3,
            galerkin_n: 16,
            paths: 10,
            seed: 0,
            output_dir: PathBuf::from("out"),
            representation: Representation::Subordinated,
            s_min: DEFAULT_S_MIN,
            epsilon: DEFAULT_EPSILON,
            space_dim: 1,
        }
    }
}

/// A field that failed validation, and why.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldError {
    pub field: &'static str,
    pub message: String,
}

fn bad(field: &'static str, message: impl Into<String>) -> std::result::Result<(), FieldError> {
    Err(FieldError {
        field,
        message: message.into(),
    })
}

impl RunConfig {
    /// Number of grid steps `T / dt`, which must be an integer up to
    /// rounding.
    pub fn steps(&self) -> usize {
        (self.horizon / self.dt).round() as usize
    }

    pub fn time_grid(&self) -> Result<Vec<f64>> {
        crate::noise::uniform_grid(self.horizon, self.steps())
    }

    pub fn validate(&self) -> std::result::Result<(), FieldError> {
        if self.schema_version != SCHEMA_VERSION {
            return bad(
                "schema_version",
                format!(
                    "unsupported schema version {}, expected {SCHEMA_VERSION}",
                    self.schema_version
                ),
            );
        }
        if !(self.alpha > 0.0 && self.alpha < 2.0) {
            return bad("alpha", format!("alpha must lie in (0, 2), got {}", self.alpha));
        }
        if !(self.horizon > 0.0 && self.horizon.is_finite()) {
            return bad("horizon", format!("horizon must be positive, got {}", self.horizon));
        }
        if !(self.dt > 0.0 && self.dt <= self.horizon) {
            return bad("dt", format!("dt must lie in (0, horizon], got {}", self.dt));
        }
        let steps = self.horizon / self.dt;
        if (steps - steps.round()).abs() > 1e-9 * steps {
            return bad(
                "dt",
                format!("horizon {} is not an integer multiple of dt {}", self.horizon, self.dt),
            );
        }
        if self.galerkin_n == 0 || self.galerkin_n > self.semigroup.truncation() {
            return bad(
                "galerkin_n",
                format!(
                    "galerkin_n must lie in [1, truncation = {}], got {}",
                    self.semigroup.truncation(),
                    self.galerkin_n
                ),
            );
        }
        if !(self.s_min > 0.0 && self.s_min < self.horizon) {
            return bad("s_min", format!("s_min must lie in (0, horizon), got {}", self.s_min));
        }
        if !(self.epsilon > 0.0) {
            return bad("epsilon", format!("epsilon must be positive, got {}", self.epsilon));
        }
        if self.space_dim == 0 {
            return bad("space_dim", "space_dim must be at least 1");
        }
        if self.representation == Representation::WhiteNoise && !(self.alpha > 1.0) {
            return bad(
                "alpha",
                format!(
                    "the white-noise representation needs alpha in (1, 2), got {}",
                    self.alpha
                ),
            );
        }
        Ok(())
    }

    /// Parses and validates TOML text. Errors carry the line of the
    /// offending key.
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let cfg: RunConfig = toml::from_str(text).map_err(|e| Error::Config(toml_error_message(text, &e)))?;
        cfg.validate().map_err(|e| Error::Config(locate(text, &e)))?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_toml_str(&text).map_err(|e| match e {
            Error::Config(msg) => Error::Config(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    pub fn to_toml_string(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Config(format!("cannot serialize config: {e}")))
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_toml_string()?)?;
        Ok(())
    }

    /// SHA-256 of the canonical JSON of every field except `output_dir`.
    pub fn config_hash(&self) -> String {
        let mut value = serde_json::to_value(self).expect("config serializes");
        if let Some(map) = value.as_object_mut() {
            map.remove("output_dir");
        }
        hex::encode(Sha256::digest(value.to_string().as_bytes()))
    }

    /// Short model description for manifests.
    pub fn model_label(&self) -> String {
        match self.semigroup.model() {
            EigenModel::PowerLaw { c_lo, c_hi, exponent } => {
                format!("power_law(c=[{c_lo}, {c_hi}], exponent={exponent})")
            }
            EigenModel::Explicit { lambdas } => format!("explicit({} eigenvalues)", lambdas.len()),
        }
    }
}

fn line_of(text: &str, offset: usize) -> usize {
    text[..offset.min(text.len())].matches('\n').count() + 1
}

fn toml_error_message(text: &str, e: &toml::de::Error) -> String {
    match e.span() {
        Some(span) => format!("line {}: {}", line_of(text, span.start), e.message()),
        None => e.message().to_string(),
    }
}

/// Finds the line defining `field` (a top-level key) in `text`.
fn locate(text: &str, e: &FieldError) -> String {
    let mut in_table = false;
    for (i, line) in text.lines().enumerate() {
        let t = line.trim_start();
        if t.starts_with('[') {
            in_table = true;
            continue;
        }
        if in_table {
            continue;
        }
        if let Some(rest) = t.strip_prefix(e.field) {
            if rest.trim_start().starts_with('=') {
                return format!("line {}: {}", i + 1, e.message);
            }
        }
    }
    format!("{}: {}", e.field, e.message)
}
