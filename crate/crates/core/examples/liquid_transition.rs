//! Gas -> liquid through the collective twirl: closed form against Monte
//! Carlo, with and without extra singlet damping.
//!
//! cargo run --release --example liquid_transition

use water_spin::isomer::{gas_to_liquid, rho_gas, GasMixParams, TwirlMethod};
use water_spin::qcore::trace_distance;

fn main() -> water_spin::Result<()> {
    let mc = TwirlMethod::MonteCarlo {
        samples: 100_000,
        seed: 7,
    };
    println!(
        "{:>5} {:>10} {:>10} {:>12} {:>14}",
        "p", "p' exact", "p' mc", "dist(mc)", "p' (damp 0.8)"
    );
    for k in 0..=10 {
        let gas = rho_gas(GasMixParams::new(k as f64 / 10.0)?);
        let (we, exact) = gas_to_liquid(&gas, TwirlMethod::Exact, 1.0)?;
        let (wm, sampled) = gas_to_liquid(&gas, mc, 1.0)?;
        let (wd, _) = gas_to_liquid(&gas, TwirlMethod::Exact, 0.8)?;
        println!(
            "{:>5.2} {:>10.6} {:>10.6} {:>12.3e} {:>14.6}",
            k as f64 / 10.0,
            we.p_prime(),
            wm.p_prime(),
            trace_distance(&exact, &sampled)?,
            wd.p_prime()
        );
    }
    Ok(())
}
