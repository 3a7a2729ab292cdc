//! A gas molecule meets the adsorbent: the molecule–surface pair is pure and
//! entangled, the molecule that leaves is mixed.
//!
//! cargo run --example adsorption

use water_spin::isomer::{adsorption_event, rho_gas, GasMixParams};
use water_spin::qcore::{purity, trace_distance, von_neumann_entropy};

fn main() -> water_spin::Result<()> {
    println!(
        "{:>5} {:>10} {:>12} {:>14}",
        "p", "purity", "entropy/bit", "dist(target)"
    );
    for k in 0..=10 {
        let target = GasMixParams::new(k as f64 / 10.0)?;
        let out = adsorption_event(target)?;
        assert!((out.joint.norm() - 1.0).abs() < 1e-12);
        println!(
            "{:>5.2} {:>10.6} {:>12.6} {:>14.2e}",
            target.p(),
            purity(&out.reduced),
            von_neumann_entropy(&out.reduced),
            trace_distance(&out.reduced, &rho_gas(target))?
        );
    }
    Ok(())
}
