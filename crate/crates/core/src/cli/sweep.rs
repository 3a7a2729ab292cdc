use rayon::prelude::*;

use super::config::{GasVariant, Method, ScenarioConfig};
use crate::error::Result;
use crate::isomer::{
    gas_to_liquid, report, rho_gas, rho_gas_mixed_variant, GasMixParams, TwirlMethod,
};
use crate::qcore::trace_distance;

/// One grid point of a sweep: gas diagnostics, the liquid state reached
/// through the twirl, and its diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub p: f64,
    pub p_prime: f64,
    pub para_gas: f64,
    pub ortho_gas: f64,
    pub ratio_gas: f64,
    pub para_liq: f64,
    pub ortho_liq: f64,
    pub ratio_liq: f64,
    pub negativity_liq: f64,
    pub entangled: bool,
    pub purity_gas: f64,
    pub purity_liq: f64,
    pub entropy_gas_bits: f64,
    pub sx_gas: f64,
    pub sy_gas: f64,
    pub sz_gas: f64,
    pub sx_liq: f64,
    pub sy_liq: f64,
    pub sz_liq: f64,
    /// Distance between the sampled and closed-form liquid states; only set
    /// for Monte-Carlo sweeps.
    pub mc_trace_dist: Option<f64>,
}

/// Column order of the CSV header and of the JSON object keys.
pub const SWEEP_COLUMNS: [&str; 20] = [
    "p",
    "p_prime",
    "para_gas",
    "ortho_gas",
    "ratio_gas",
    "para_liq",
    "ortho_liq",
    "ratio_liq",
    "negativity_liq",
    "entangled",
    "purity_gas",
    "purity_liq",
    "entropy_gas_bits",
    "sx_gas",
    "sy_gas",
    "sz_gas",
    "sx_liq",
    "sy_liq",
    "sz_liq",
    "mc_trace_dist",
];

/// Runs the gas → liquid pipeline at every grid point, in grid order.
pub fn run_sweep(cfg: &ScenarioConfig) -> Result<Vec<SweepRow>> {
    cfg.sweep
        .grid()
        .into_par_iter()
        .map(|p| sweep_point(cfg, p))
        .collect()
}

fn sweep_point(cfg: &ScenarioConfig, p: f64) -> Result<SweepRow> {
    let params = GasMixParams::new(p)?;
    let gas = match cfg.gas_variant {
        GasVariant::Coherent => rho_gas(params),
        GasVariant::Mixed => rho_gas_mixed_variant(params),
    };
    let method = match cfg.method {
        Method::Exact => TwirlMethod::Exact,
        Method::Mc => TwirlMethod::MonteCarlo {
            samples: cfg.mc_samples as usize,
            seed: cfg.seed,
        },
    };
    let (w, liquid) = gas_to_liquid(&gas, method, cfg.damping)?;
    let mc_trace_dist = match cfg.method {
        Method::Exact => None,
        Method::Mc => {
            let (_, exact) = gas_to_liquid(&gas, TwirlMethod::Exact, cfg.damping)?;
            Some(trace_distance(&liquid, &exact)?)
        }
    };

    let g = report(&gas, None)?;
    let l = report(&liquid, Some(w))?;
    Ok(SweepRow {
        p,
        p_prime: w.p_prime(),
        para_gas: g.para_fraction,
        ortho_gas: g.ortho_fraction,
        ratio_gas: g.ortho_para_ratio,
        para_liq: l.para_fraction,
        ortho_liq: l.ortho_fraction,
        ratio_liq: l.ortho_para_ratio,
        negativity_liq: l.negativity,
        entangled: l.entangled,
        purity_gas: g.purity,
        purity_liq: l.purity,
        entropy_gas_bits: g.entropy_bits,
        sx_gas: g.magnetization[0],
        sy_gas: g.magnetization[1],
        sz_gas: g.magnetization[2],
        sx_liq: l.magnetization[0],
        sy_liq: l.magnetization[1],
        sz_liq: l.magnetization[2],
        mc_trace_dist,
    })
}
