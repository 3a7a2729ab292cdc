//! Spin isomers of the water molecule.
//!
//! Para-water is the proton singlet `|Ψ⁻⟩`; ortho-water is the triplet block
//! spanned by `|Ψ⁺⟩, |00⟩, |11⟩`. This module builds the gas and liquid
//! states, the molecule–surface composite formed on adsorption, the
//! gas→liquid transition, and the diagnostics gathered in [`IsomerReport`].

use crate::channels::{singlet_damping, werner_twirl_exact, werner_twirl_mc, WernerParams};
use crate::error::{argument, Result};
use crate::qcore::{
    basis_ket, bell_psi, density_from_ket, eigvals_hermitian, expectation, fidelity_with_ket,
    partial_trace, pauli, purify, purity, singlet, von_neumann_entropy, BellSign, BipartiteSplit,
    ComplexMatrix, DensityMatrix, Observable, PureState, Subsystem,
};

pub use crate::qcore::gas_pure_state;

/// Threshold on the negativity above which a state counts as entangled.
pub const ENTANGLEMENT_TOL: f64 = 1e-10;

/// Para fractions at or below this give an infinite ortho/para ratio.
pub const PARA_FLOOR: f64 = 1e-12;

/// Singlet (para) weight `p ∈ [0, 1]` of the adsorption-modified gas state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GasMixParams {
    p: f64,
}

impl GasMixParams {
    pub fn new(p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(argument(format!("gas singlet weight {p} outside [0, 1]")));
        }
        Ok(Self { p })
    }

    pub fn p(&self) -> f64 {
        self.p
    }
}

/// Normalized ortho component `(|Ψ⁺⟩ + |00⟩ + |11⟩)/√3`.
pub fn ortho_pure_state() -> PureState {
    let plus = bell_psi(BellSign::Plus);
    let amps = plus
        .amplitudes()
        .iter()
        .zip(basis_ket(4, 0).unwrap().amplitudes())
        .zip(basis_ket(4, 3).unwrap().amplitudes())
        .map(|((a, b), c)| a + b + c)
        .collect();
    PureState::normalized(amps).expect("non-zero triplet vector")
}

/// `p |Ψ⁻⟩⟨Ψ⁻| + (1 − p)/3 · |v⟩⟨v|` with the unnormalized triplet sum
/// `|v⟩ = |Ψ⁺⟩ + |00⟩ + |11⟩`. The triplet portion is a coherent rank-one
/// term, so the state has rank at most two.
pub fn rho_gas(params: GasMixParams) -> DensityMatrix {
    let p = params.p;
    let ps = singlet().projector().scale_real(p);
    // (1 − p)/3 · |v⟩⟨v| = (1 − p) · |v̂⟩⟨v̂|
    let pv = ortho_pure_state().projector().scale_real(1.0 - p);
    DensityMatrix::from_hermitian_part(&(&ps + &pv)).expect("convex mixture of projectors")
}

/// Incoherent alternative: the triplet weight spread evenly over
/// `|Ψ⁺⟩⟨Ψ⁺|, |00⟩⟨00|, |11⟩⟨11|`.
pub fn rho_gas_mixed_variant(params: GasMixParams) -> DensityMatrix {
    let p = params.p;
    let t = (1.0 - p) / 3.0;
    let mut m = singlet().projector().scale_real(p);
    for k in [
        bell_psi(BellSign::Plus),
        basis_ket(4, 0).unwrap(),
        basis_ket(4, 3).unwrap(),
    ] {
        m = &m + &k.projector().scale_real(t);
    }
    DensityMatrix::from_hermitian_part(&m).expect("convex mixture of projectors")
}

/// Werner state `p′|Ψ⁻⟩⟨Ψ⁻| + (1 − p′) I/4`.
pub fn rho_liq(w: WernerParams) -> DensityMatrix {
    w.state()
}

fn require_two_qubits(rho: &DensityMatrix) -> Result<()> {
    if rho.dim() != 4 {
        return Err(argument(format!(
            "expected a two-qubit state, got dim {}",
            rho.dim()
        )));
    }
    Ok(())
}

/// Singlet population `⟨Ψ⁻|ρ|Ψ⁻⟩`, clamped onto `[0, 1]` against rounding.
pub fn para_fraction(rho: &DensityMatrix) -> Result<f64> {
    require_two_qubits(rho)?;
    Ok(fidelity_with_ket(rho, &singlet())?.clamp(0.0, 1.0))
}

/// `(1 − para)/para`; `f64::INFINITY` when the para fraction is at or below
/// [`PARA_FLOOR`].
pub fn ortho_para_ratio(rho: &DensityMatrix) -> Result<f64> {
    let para = para_fraction(rho)?;
    Ok(ratio_from_para(para))
}

fn ratio_from_para(para: f64) -> f64 {
    if para <= PARA_FLOOR {
        f64::INFINITY
    } else {
        (1.0 - para) / para
    }
}

/// Result of a molecule meeting the adsorbent.
#[derive(Debug, Clone)]
pub struct AdsorptionOutcome {
    /// Pure molecule ⊗ surface state on 16 amplitudes (molecule first).
    pub joint: PureState,
    /// Spin state of the molecule once the composite breaks up.
    pub reduced: DensityMatrix,
}

/// Builds the pure composite whose molecular marginal is `rho_gas(target)`,
/// and returns both.
pub fn adsorption_event(target: GasMixParams) -> Result<AdsorptionOutcome> {
    let joint = purify(&rho_gas(target))?;
    let reduced = partial_trace(
        &density_from_ket(&joint)?,
        BipartiteSplit { dim_a: 4, dim_b: 4 },
        Subsystem::A,
    )?;
    Ok(AdsorptionOutcome { joint, reduced })
}

/// How the collective twirl is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwirlMethod {
    Exact,
    MonteCarlo { samples: usize, seed: u64 },
}

/// Sends a gas state through the liquid-transition channel: the collective
/// twirl, then [`singlet_damping`] by `damping`.
///
/// With the Monte-Carlo twirl the returned state is the sampled average
/// (mixed toward `I/4` by the damping), not its Werner projection; the
/// returned parameter is read off its singlet fidelity.
pub fn gas_to_liquid(
    rho: &DensityMatrix,
    method: TwirlMethod,
    damping: f64,
) -> Result<(WernerParams, DensityMatrix)> {
    require_two_qubits(rho)?;
    if !(0.0..=1.0).contains(&damping) {
        return Err(argument(format!("damping {damping} outside [0, 1]")));
    }
    match method {
        TwirlMethod::Exact => {
            let (w, _) = werner_twirl_exact(rho)?;
            let w = singlet_damping(w, damping)?;
            Ok((w, w.state()))
        }
        TwirlMethod::MonteCarlo { samples, seed } => {
            let twirled = werner_twirl_mc(rho, samples, seed)?;
            let mixed = DensityMatrix::maximally_mixed(4);
            let m =
                &twirled.matrix().scale_real(damping) + &mixed.matrix().scale_real(1.0 - damping);
            let state = DensityMatrix::from_hermitian_part(&m)?;
            let w = WernerParams::from_singlet_fidelity(fidelity_with_ket(&state, &singlet())?)?;
            Ok((w, state))
        }
    }
}

/// Partial transpose on the second qubit.
pub fn partial_transpose(rho: &DensityMatrix) -> Result<ComplexMatrix> {
    require_two_qubits(rho)?;
    let m = rho.matrix();
    Ok(ComplexMatrix::from_fn(4, 4, |r, c| {
        let (i, k) = (r / 2, r % 2);
        let (j, l) = (c / 2, c % 2);
        m[(i * 2 + l, j * 2 + k)]
    }))
}

/// Sum of the magnitudes of the negative partial-transpose eigenvalues.
pub fn negativity(rho: &DensityMatrix) -> Result<f64> {
    let pt = partial_transpose(rho)?;
    let vals = eigvals_hermitian(&pt)?;
    Ok(vals
        .iter()
        .filter(|&&l| l < 0.0)
        .fold(0.0, |acc, l| acc - l))
}

/// PPT test; decisive for two qubits.
pub fn is_entangled(rho: &DensityMatrix) -> bool {
    negativity(rho).is_ok_and(|n| n > ENTANGLEMENT_TOL)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpinAxis {
    X,
    Y,
    Z,
}

impl SpinAxis {
    pub const ALL: [SpinAxis; 3] = [SpinAxis::X, SpinAxis::Y, SpinAxis::Z];
}

/// Collective spin `(σ ⊗ I + I ⊗ σ)/2` in units of ħ.
pub fn collective_spin(axis: SpinAxis) -> Observable {
    let sigma = match axis {
        SpinAxis::X => pauli::x(),
        SpinAxis::Y => pauli::y(),
        SpinAxis::Z => pauli::z(),
    };
    let id = pauli::i2();
    let s = &sigma.kron(&id) + &id.kron(&sigma);
    Observable::new(s.scale_real(0.5)).expect("Pauli sums are Hermitian")
}

/// `Tr(ρ S_axis)`.
pub fn magnetization(rho: &DensityMatrix, axis: SpinAxis) -> Result<f64> {
    require_two_qubits(rho)?;
    expectation(rho, &collective_spin(axis))
}

/// Scalar diagnostics of a two-proton spin state.
#[derive(Debug, Clone, PartialEq)]
pub struct IsomerReport {
    pub para_fraction: f64,
    pub ortho_fraction: f64,
    /// `f64::INFINITY` flags a para-free state.
    pub ortho_para_ratio: f64,
    pub werner_p_prime: Option<f64>,
    pub negativity: f64,
    pub entangled: bool,
    /// `[⟨S_x⟩, ⟨S_y⟩, ⟨S_z⟩]`.
    pub magnetization: [f64; 3],
    pub purity: f64,
    pub entropy_bits: f64,
}

pub fn report(rho: &DensityMatrix, w: Option<WernerParams>) -> Result<IsomerReport> {
    let para = para_fraction(rho)?;
    let neg = negativity(rho)?;
    let mut mag = [0.0; 3];
    for (slot, axis) in mag.iter_mut().zip(SpinAxis::ALL) {
        *slot = magnetization(rho, axis)?;
    }
    Ok(IsomerReport {
        para_fraction: para,
        ortho_fraction: 1.0 - para,
        ortho_para_ratio: ratio_from_para(para),
        werner_p_prime: w.map(|w| w.p_prime()),
        negativity: neg,
        entangled: neg > ENTANGLEMENT_TOL,
        magnetization: mag,
        purity: purity(rho),
        entropy_bits: von_neumann_entropy(rho),
    })
}
