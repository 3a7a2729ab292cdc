//! The singlet and every Werner state are unchanged when both spins see the
//! same random unitary; a product state is not.
//!
//! cargo run --example collective_noise

use water_spin::channels::{collective_unitary, haar_su2, UnitarySampler, WernerParams};
use water_spin::isomer::rho_liq;
use water_spin::qcore::{basis_ket, density_from_ket, trace_distance, DensityMatrix};

fn main() -> water_spin::Result<()> {
    let mut states: Vec<(String, DensityMatrix)> = [-1.0 / 3.0, 0.0, 0.5, 1.0]
        .into_iter()
        .map(|p| {
            (
                format!("werner p'={p:.3}"),
                rho_liq(WernerParams::new(p).unwrap()),
            )
        })
        .collect();
    states.push(("|00><00|".into(), density_from_ket(&basis_ket(4, 0)?)?));

    let mut sampler = UnitarySampler::new(1);
    let unitaries: Vec<_> = (0..1000).map(|_| haar_su2(&mut sampler)).collect();
    for (name, rho) in &states {
        let mut worst = 0.0_f64;
        for u in &unitaries {
            let out = collective_unitary(u)?.apply(rho)?;
            worst = worst.max(trace_distance(&out, rho)?);
        }
        println!("{name:<16} max distance over 1000 U⊗U: {worst:.3e}");
    }
    Ok(())
}
