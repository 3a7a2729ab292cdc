//! Scenario-driven parameter sweeps and their CSV/JSON reports.
//!
//! A scenario is a single JSON document:
//!
//! ```json
//! {
//!   "sweep": {"p_start": 0.0, "p_end": 1.0, "p_steps": 11},
//!   "method": "exact",
//!   "mc_samples": 100000,
//!   "seed": 0,
//!   "damping": 1.0,
//!   "gas_variant": "coherent",
//!   "output_format": "csv",
//!   "output_path": "-"
//! }
//! ```
//!
//! Only `sweep` is required. Unknown keys are rejected. Numbers in reports
//! carry 12 significant digits; infinite ortho/para ratios are written as
//! `inf` (a string in JSON).

mod config;
mod emit;
mod sweep;

pub use config::{
    parse_config, ConfigError, GasVariant, Method, OutputFormat, ScenarioConfig, SweepRange,
    STDOUT_SENTINEL,
};
pub use emit::{emit, format_sig12, write_output};
pub use sweep::{run_sweep, SweepRow, SWEEP_COLUMNS};

/// Process exit status for a run.
pub mod exit_code {
    pub const SUCCESS: u8 = 0;
    /// Configuration or I/O problem.
    pub const CONFIG_OR_IO: u8 = 1;
    /// A state or channel failed numerical validation mid-run.
    pub const NUMERICAL: u8 = 2;
}
