//! Para/ortho accounting for gas-phase water.
//!
//! cargo run --example gas_isomers

use water_spin::isomer::{
    gas_pure_state, ortho_para_ratio, para_fraction, rho_gas, rho_gas_mixed_variant, GasMixParams,
};
use water_spin::qcore::{density_from_ket, trace_distance};

fn main() -> water_spin::Result<()> {
    let psi = gas_pure_state();
    println!("|psi> amplitudes (|00>,|01>,|10>,|11>):");
    for z in psi.amplitudes() {
        println!("  {:+.6}", z.re);
    }
    let pure = density_from_ket(&psi)?;
    println!(
        "para fraction {:.6}, ortho/para {:.6}\n",
        para_fraction(&pure)?,
        ortho_para_ratio(&pure)?
    );

    println!(
        "{:>5} {:>8} {:>10} {:>14}",
        "p", "para", "ortho/para", "dist(variant)"
    );
    for k in 0..=10 {
        let params = GasMixParams::new(k as f64 / 10.0)?;
        let coherent = rho_gas(params);
        let mixed = rho_gas_mixed_variant(params);
        println!(
            "{:>5.2} {:>8.4} {:>10.4} {:>14.6}",
            params.p(),
            para_fraction(&coherent)?,
            ortho_para_ratio(&coherent)?,
            trace_distance(&coherent, &mixed)?
        );
    }
    Ok(())
}
