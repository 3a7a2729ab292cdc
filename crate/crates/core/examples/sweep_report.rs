//! Drives a sweep from a JSON scenario and prints the CSV report, the same
//! path the `water-spin sweep` command takes.
//!
//! cargo run --example sweep_report

use water_spin::cli::{emit, parse_config, run_sweep};

fn main() {
    let cfg = parse_config(
        r#"{
            "sweep": {"p_start": 0.0, "p_end": 1.0, "p_steps": 5},
            "method": "exact",
            "gas_variant": "coherent"
        }"#,
    )
    .expect("valid scenario");
    let rows = run_sweep(&cfg).expect("sweep runs");
    print!(
        "{}",
        String::from_utf8(emit(&rows, cfg.output_format)).unwrap()
    );
}
