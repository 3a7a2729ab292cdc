//! Dephasing between the singlet and triplet blocks turns the pure gas state
//! into rho_gas(1/4).
//!
//! cargo run --example superselection

use water_spin::channels::block_dephasing;
use water_spin::isomer::{gas_pure_state, para_fraction, rho_gas, GasMixParams};
use water_spin::qcore::{density_from_ket, purity, trace_distance};

fn main() -> water_spin::Result<()> {
    let ch = block_dephasing();
    println!("block dephasing is CPTP: {}", ch.verify_cptp(1e-10));

    let pure = density_from_ket(&gas_pure_state())?;
    let dephased = ch.apply(&pure)?;
    println!(
        "purity before {:.6}, after {:.6}",
        purity(&pure),
        purity(&dephased)
    );
    println!("para fraction after {:.6}", para_fraction(&dephased)?);
    println!(
        "distance to rho_gas(0.25): {:.3e}",
        trace_distance(&dephased, &rho_gas(GasMixParams::new(0.25)?))?
    );
    Ok(())
}
