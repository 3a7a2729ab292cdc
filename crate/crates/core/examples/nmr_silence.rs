//! Collective magnetization of gas and liquid states. Werner states carry
//! no moment along any axis.
//!
//! cargo run --example nmr_silence

use water_spin::channels::WernerParams;
use water_spin::isomer::{magnetization, rho_gas, rho_liq, GasMixParams, SpinAxis};
use water_spin::qcore::DensityMatrix;

fn moments(rho: &DensityMatrix) -> water_spin::Result<[f64; 3]> {
    let mut m = [0.0; 3];
    for (slot, axis) in m.iter_mut().zip(SpinAxis::ALL) {
        *slot = magnetization(rho, axis)?;
    }
    Ok(m)
}

fn main() -> water_spin::Result<()> {
    println!(
        "{:>5} {:>30} {:>30}",
        "p", "gas <Sx,Sy,Sz>", "liquid <Sx,Sy,Sz>"
    );
    for k in 0..=5 {
        let p = k as f64 / 5.0;
        let g = moments(&rho_gas(GasMixParams::new(p)?))?;
        let l = moments(&rho_liq(WernerParams::new(p)?))?;
        println!(
            "{p:>5.2} {:>9.5} {:>9.5} {:>9.5}  {:>9.5} {:>9.5} {:>9.5}",
            g[0], g[1], g[2], l[0], l[1], l[2]
        );
    }
    Ok(())
}
