use std::fmt;
use std::path::PathBuf;

use serde::Deserialize;

/// Output path value meaning "write to standard output".
pub const STDOUT_SENTINEL: &str = "-";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Exact,
    Mc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum GasVariant {
    Coherent,
    Mixed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepRange {
    pub p_start: f64,
    pub p_end: f64,
    pub p_steps: u64,
}

impl SweepRange {
    /// `p_start + k (p_end − p_start)/(p_steps − 1)`; a single point when
    /// `p_steps == 1`. The last point is exactly `p_end`.
    pub fn grid(&self) -> Vec<f64> {
        if self.p_steps <= 1 {
            return vec![self.p_start];
        }
        let span = self.p_end - self.p_start;
        let last = (self.p_steps - 1) as f64;
        (0..self.p_steps)
            .map(|k| (self.p_start + span * k as f64 / last).clamp(self.p_start, self.p_end))
            .collect()
    }
}

/// A sweep scenario, as read from a single JSON document.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub sweep: SweepRange,
    #[serde(default = "default_method")]
    pub method: Method,
    #[serde(default = "default_mc_samples")]
    pub mc_samples: u64,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_damping")]
    pub damping: f64,
    #[serde(default = "default_gas_variant")]
    pub gas_variant: GasVariant,
    #[serde(default = "default_output_format")]
    pub output_format: OutputFormat,
    #[serde(default = "default_output_path")]
    pub output_path: String,
}

fn default_method() -> Method {
    Method::Exact
}

fn default_mc_samples() -> u64 {
    100_000
}

fn default_damping() -> f64 {
    1.0
}

fn default_gas_variant() -> GasVariant {
    GasVariant::Coherent
}

fn default_output_format() -> OutputFormat {
    OutputFormat::Csv
}

fn default_output_path() -> String {
    STDOUT_SENTINEL.to_string()
}

#[derive(Debug, Clone, PartialEq)]
pub enum ConfigError {
    /// Malformed JSON, wrong types or unknown keys.
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    /// Well-formed document breaking a field constraint.
    Invalid {
        field: &'static str,
        message: String,
    },
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigError::Parse {
                line,
                column,
                message,
            } => {
                write!(
                    f,
                    "config parse error at line {line}, column {column}: {message}"
                )
            }
            ConfigError::Invalid { field, message } => {
                write!(f, "invalid config field `{field}`: {message}")
            }
        }
    }
}

impl std::error::Error for ConfigError {}

fn invalid(field: &'static str, message: impl Into<String>) -> ConfigError {
    ConfigError::Invalid {
        field,
        message: message.into(),
    }
}

impl ScenarioConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        let s = &self.sweep;
        if !(0.0..=1.0).contains(&s.p_start) {
            return Err(invalid("sweep.p_start", "must lie in [0, 1]"));
        }
        if !(0.0..=1.0).contains(&s.p_end) {
            return Err(invalid("sweep.p_end", "must lie in [0, 1]"));
        }
        if s.p_start > s.p_end {
            return Err(invalid("sweep.p_start", "p_start ≤ p_end violated"));
        }
        if s.p_steps < 1 {
            return Err(invalid("sweep.p_steps", "must be at least 1"));
        }
        if self.mc_samples < 1 {
            return Err(invalid("mc_samples", "must be at least 1"));
        }
        if !(0.0..=1.0).contains(&self.damping) {
            return Err(invalid("damping", "must lie in [0, 1]"));
        }
        if self.output_path.is_empty() {
            return Err(invalid("output_path", "must not be empty"));
        }
        Ok(())
    }

    /// `None` means standard output.
    pub fn output_file(&self) -> Option<PathBuf> {
        (self.output_path != STDOUT_SENTINEL).then(|| PathBuf::from(&self.output_path))
    }
}

/// Parses and validates a scenario, applying defaults for absent fields.
pub fn parse_config(document: &str) -> Result<ScenarioConfig, ConfigError> {
    let cfg: ScenarioConfig = serde_json::from_str(document).map_err(|e| ConfigError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    cfg.validate()?;
    Ok(cfg)
}
