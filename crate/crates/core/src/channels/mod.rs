//! Quantum channels in operator-sum form and the collective (`U ⊗ U`)
//! operations acting on two spins: block dephasing between singlet and
//! triplet, two-qubit depolarization, and the twirl onto the Werner family.

mod kraus;
mod twirl;

pub use kraus::{block_dephasing, collective_unitary, depolarizing, KrausChannel};
pub use twirl::{
    haar_su2, singlet_damping, werner_twirl_exact, werner_twirl_mc, UnitarySampler, WernerParams,
};
