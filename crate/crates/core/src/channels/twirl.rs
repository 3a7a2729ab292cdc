use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;

use crate::error::{argument, validation, Result};
use crate::qcore::{fidelity_with_ket, singlet, ComplexMatrix, DensityMatrix};
use crate::VALIDATION_TOL;

/// Samples per work unit in the Monte-Carlo twirl. Partial sums are formed
/// per chunk and added in chunk order, so the floating-point result does not
/// depend on how rayon schedules the chunks.
const TWIRL_CHUNK: usize = 2048;

/// Singlet weight `p′` of a Werner state `p′|Ψ⁻⟩⟨Ψ⁻| + (1 − p′) I/4`.
///
/// The state is positive semidefinite exactly for `−1/3 ≤ p′ ≤ 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WernerParams {
    p_prime: f64,
}

impl WernerParams {
    pub const MIN: f64 = -1.0 / 3.0;
    pub const MAX: f64 = 1.0;

    /// Values within 1e-10 outside the range are clamped onto it; anything
    /// further out would give a non-PSD state and is a validation error.
    pub fn new(p_prime: f64) -> Result<Self> {
        if !(Self::MIN - VALIDATION_TOL..=Self::MAX + VALIDATION_TOL).contains(&p_prime) {
            return Err(validation(format!(
                "Werner parameter {p_prime} outside [-1/3, 1]"
            )));
        }
        Ok(Self {
            p_prime: p_prime.clamp(Self::MIN, Self::MAX),
        })
    }

    /// Werner parameter with the given singlet fidelity `F`: `p′ = (4F − 1)/3`.
    pub fn from_singlet_fidelity(f: f64) -> Result<Self> {
        Self::new((4.0 * f - 1.0) / 3.0)
    }

    pub fn p_prime(&self) -> f64 {
        self.p_prime
    }

    /// `⟨Ψ⁻|ρ|Ψ⁻⟩ = (1 + 3p′)/4`.
    pub fn singlet_fidelity(&self) -> f64 {
        (1.0 + 3.0 * self.p_prime) / 4.0
    }

    pub fn state(&self) -> DensityMatrix {
        let ps = singlet().projector().scale_real(self.p_prime);
        let mixed = ComplexMatrix::identity(4).scale_real((1.0 - self.p_prime) / 4.0);
        DensityMatrix::from_hermitian_part(&(&ps + &mixed))
            .expect("Werner state in range is a density matrix")
    }
}

/// Counter-based source of Haar-random SU(2) matrices.
///
/// Draw `i` for a given seed always comes from the ChaCha8 stream `i` of that
/// seed, so any draw can be reproduced (or computed out of order) from
/// `(seed, counter)` alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnitarySampler {
    pub seed: u64,
    pub counter: u64,
}

impl UnitarySampler {
    pub fn new(seed: u64) -> Self {
        Self { seed, counter: 0 }
    }

    /// The unitary at position `counter` of the `seed` sequence.
    pub fn unitary_at(seed: u64, counter: u64) -> ComplexMatrix {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(counter);
        let mut g = || -> f64 { StandardNormal.sample(&mut rng) };
        let a = Complex64::new(g(), g());
        let b = Complex64::new(g(), g());
        let norm = (a.norm_sqr() + b.norm_sqr()).sqrt();
        let (a, b) = (a / norm, b / norm);
        // first column (a, b); the completion makes det = 1
        ComplexMatrix::from_row_major(2, 2, vec![a, -b.conj(), b, a.conj()])
            .expect("finite Gaussian draw")
    }
}

/// Next Haar-distributed SU(2) matrix; advances the counter.
pub fn haar_su2(sampler: &mut UnitarySampler) -> ComplexMatrix {
    let u = UnitarySampler::unitary_at(sampler.seed, sampler.counter);
    sampler.counter += 1;
    u
}

/// Monte-Carlo estimate of the collective twirl `E_U[(U⊗U) ρ (U⊗U)†]`.
pub fn werner_twirl_mc(rho: &DensityMatrix, n_samples: usize, seed: u64) -> Result<DensityMatrix> {
    if n_samples == 0 {
        return Err(argument("Monte-Carlo twirl needs at least one sample"));
    }
    if rho.dim() != 4 {
        return Err(argument(format!(
            "twirl acts on two qubits, got dim {}",
            rho.dim()
        )));
    }
    let n_chunks = n_samples.div_ceil(TWIRL_CHUNK);
    let partials: Vec<ComplexMatrix> = (0..n_chunks)
        .into_par_iter()
        .map(|chunk| {
            let start = chunk * TWIRL_CHUNK;
            let end = (start + TWIRL_CHUNK).min(n_samples);
            let mut acc = ComplexMatrix::zeros(4, 4);
            for i in start..end {
                let u = UnitarySampler::unitary_at(seed, i as u64);
                acc = &acc + &rho.matrix().conjugate_by(&u.kron(&u));
            }
            acc
        })
        .collect();
    let total = partials
        .iter()
        .fold(ComplexMatrix::zeros(4, 4), |acc, m| &acc + m);
    DensityMatrix::from_hermitian_part(&total.scale_real(1.0 / n_samples as f64))
}

/// Closed form of the collective twirl: the Werner state with the same
/// singlet fidelity `F`, `p′ = (4F − 1)/3`.
pub fn werner_twirl_exact(rho: &DensityMatrix) -> Result<(WernerParams, DensityMatrix)> {
    if rho.dim() != 4 {
        return Err(argument(format!(
            "twirl acts on two qubits, got dim {}",
            rho.dim()
        )));
    }
    let f = fidelity_with_ket(rho, &singlet())?;
    let w = WernerParams::from_singlet_fidelity(f)?;
    Ok((w, w.state()))
}

/// Extra loss of the delivered singlet weight: `p′ ↦ λ p′`.
pub fn singlet_damping(w: WernerParams, lambda: f64) -> Result<WernerParams> {
    if !(0.0..=1.0).contains(&lambda) {
        return Err(argument(format!("damping {lambda} outside [0, 1]")));
    }
    WernerParams::new(lambda * w.p_prime())
}
