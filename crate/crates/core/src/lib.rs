//! # water-spin
//!
//! Proton-spin states of the water molecule treated as a two-qubit system.
//!
//! The two proton spins live in `C² ⊗ C²`. The para isomer is the singlet
//! `|Ψ⁻⟩`, the ortho isomer is the three-dimensional triplet block. The crate
//! follows a molecule through three stages:
//!
//! 1. **gas**: the pure superposition [`isomer::gas_pure_state`] with
//!    para/ortho = 1/3, and the mixed state [`isomer::rho_gas`] with a tunable
//!    singlet weight `p`;
//! 2. **adsorption**: [`isomer::adsorption_event`] builds the pure
//!    molecule–surface composite whose reduced state is `rho_gas(p)`;
//! 3. **liquid**: [`isomer::gas_to_liquid`] sends the gas state through the
//!    collective `U ⊗ U` twirl, landing on the Werner family
//!    `p′|Ψ⁻⟩⟨Ψ⁻| + (1 − p′) I/4`.
//!
//! Diagnostics (para fraction, negativity, collective magnetization, purity,
//! entropy) are gathered by [`isomer::report`]. The [`cli`] module drives
//! parameter sweeps from a JSON scenario and writes CSV or JSON reports; the
//! `water-spin` binary is a thin wrapper around it.
//!
//! Basis order is fixed everywhere as `|00⟩, |01⟩, |10⟩, |11⟩`, the first
//! factor being proton 1 (slowest-varying index).
//!
//! ```
//! use water_spin::isomer::{self, GasMixParams, TwirlMethod};
//!
//! let gas = isomer::rho_gas(GasMixParams::new(0.7).unwrap());
//! let (w, liquid) = isomer::gas_to_liquid(&gas, TwirlMethod::Exact, 1.0).unwrap();
//! assert!((w.p_prime() - 0.6).abs() < 1e-12);
//! assert!(isomer::is_entangled(&liquid));
//! ```

#![forbid(unsafe_code)]

pub mod channels;
pub mod cli;
mod error;
pub mod isomer;
pub mod qcore;

pub use error::{Error, Result};

/// Uniform tolerance for Hermiticity, trace and positivity checks.
pub const VALIDATION_TOL: f64 = 1e-10;
