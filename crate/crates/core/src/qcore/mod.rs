//! Dense complex linear algebra for small Hilbert spaces: kets, density
//! matrices, tensor structure, partial trace, purification and Hermitian
//! spectra.
//!
//! Two-qubit basis order is `|00⟩, |01⟩, |10⟩, |11⟩`; the first tensor factor
//! is the slowest-varying index.

mod eigen;
mod matrix;
mod ops;
mod state;

pub use eigen::{eigh, eigvals_hermitian, HermitianEigen};
pub use matrix::{pauli, ComplexMatrix};
pub use ops::{
    expectation, fidelity_with_ket, partial_trace, purify, purity, trace_distance,
    von_neumann_entropy,
};
pub use state::{
    basis_ket, bell_psi, density_from_ket, gas_pure_state, singlet, tensor, tensor_kets, BellSign,
    BipartiteSplit, DensityMatrix, Observable, PureState, Subsystem,
};
