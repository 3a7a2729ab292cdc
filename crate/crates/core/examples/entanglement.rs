//! PPT test along the Werner family: entangled exactly above p' = 1/3.
//!
//! cargo run --example entanglement

use water_spin::channels::WernerParams;
use water_spin::isomer::{is_entangled, negativity, rho_liq};

fn main() -> water_spin::Result<()> {
    println!("{:>8} {:>12} {:>10}", "p'", "negativity", "entangled");
    for k in 0..=16 {
        let p = -1.0 / 3.0 + k as f64 / 12.0;
        let w = rho_liq(WernerParams::new(p)?);
        println!(
            "{:>8.4} {:>12.6} {:>10}",
            p,
            negativity(&w)?,
            is_entangled(&w)
        );
    }
    Ok(())
}
