use num_complex::Complex64;

use super::eigen::{eigh, eigvals_hermitian};
use super::state::{BipartiteSplit, DensityMatrix, Observable, PureState, Subsystem};
use super::ComplexMatrix;
use crate::error::{argument, Result};

/// Eigenvalues below this are treated as exact zeros in entropies and
/// purification weights.
const SPECTRAL_FLOOR: f64 = 1e-15;

/// Reduced state on the kept factor of `split`.
pub fn partial_trace(
    rho: &DensityMatrix,
    split: BipartiteSplit,
    keep: Subsystem,
) -> Result<DensityMatrix> {
    if split.total() != rho.dim() {
        return Err(argument(format!(
            "split {}x{} does not match state dimension {}",
            split.dim_a,
            split.dim_b,
            rho.dim()
        )));
    }
    let m = rho.matrix();
    let (da, db) = (split.dim_a, split.dim_b);
    let reduced = match keep {
        Subsystem::A => ComplexMatrix::from_fn(da, da, |i, j| {
            (0..db).map(|k| m[(i * db + k, j * db + k)]).sum()
        }),
        Subsystem::B => ComplexMatrix::from_fn(db, db, |k, l| {
            (0..da).map(|i| m[(i * db + k, i * db + l)]).sum()
        }),
    };
    DensityMatrix::from_hermitian_part(&reduced)
}

/// Purification `Σᵢ √λᵢ |eᵢ⟩ ⊗ |i⟩` on `dim²` amplitudes.
///
/// The ancilla is the second tensor factor. Eigenpairs are taken in
/// descending eigenvalue order, so the dominant eigenvector pairs with
/// ancilla `|0⟩`; eigenvector phases follow [`eigh`]'s gauge.
pub fn purify(rho: &DensityMatrix) -> Result<PureState> {
    let d = rho.dim();
    let eig = eigh(rho.matrix())?;
    let mut amps = vec![Complex64::new(0.0, 0.0); d * d];
    for (slot, j) in (0..d).rev().enumerate() {
        let lambda = eig.values[j];
        if lambda <= SPECTRAL_FLOOR {
            continue;
        }
        let w = lambda.sqrt();
        for a in 0..d {
            amps[a * d + slot] = eig.vectors[(a, j)] * w;
        }
    }
    PureState::normalized(amps)
}

/// `Tr ρ²`.
pub fn purity(rho: &DensityMatrix) -> f64 {
    let m = rho.matrix();
    let n = rho.dim();
    let mut acc = 0.0;
    for r in 0..n {
        for c in 0..n {
            acc += m[(r, c)].norm_sqr();
        }
    }
    acc
}

/// `−Σ λ log₂ λ`, with `0 · log 0 = 0`.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> f64 {
    let s: f64 = rho
        .eigenvalues()
        .into_iter()
        .filter(|&l| l > SPECTRAL_FLOOR)
        .map(|l| -l * l.log2())
        .sum();
    s.max(0.0)
}

/// `⟨k|ρ|k⟩`.
pub fn fidelity_with_ket(rho: &DensityMatrix, k: &PureState) -> Result<f64> {
    if rho.dim() != k.dim() {
        return Err(argument(format!(
            "state dim {} vs ket dim {}",
            rho.dim(),
            k.dim()
        )));
    }
    let rk = rho.matrix().mul_vec(k.amplitudes());
    let f: Complex64 = k
        .amplitudes()
        .iter()
        .zip(&rk)
        .map(|(a, b)| a.conj() * b)
        .sum();
    Ok(f.re)
}

/// `Tr(ρ O)`.
pub fn expectation(rho: &DensityMatrix, obs: &Observable) -> Result<f64> {
    if rho.dim() != obs.dim() {
        return Err(argument(format!(
            "state dim {} vs observable dim {}",
            rho.dim(),
            obs.dim()
        )));
    }
    let (m, o) = (rho.matrix(), obs.matrix());
    let n = rho.dim();
    let mut acc = Complex64::new(0.0, 0.0);
    for r in 0..n {
        for c in 0..n {
            acc += m[(r, c)] * o[(c, r)];
        }
    }
    Ok(acc.re)
}

/// `½ Σ |eig(a − b)|`.
pub fn trace_distance(a: &DensityMatrix, b: &DensityMatrix) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(argument(format!(
            "trace distance between dims {} and {}",
            a.dim(),
            b.dim()
        )));
    }
    let diff = (a.matrix() - b.matrix()).hermitian_part();
    let vals = eigvals_hermitian(&diff)?;
    Ok(0.5 * vals.iter().map(|l| l.abs()).sum::<f64>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::{basis_ket, density_from_ket, singlet};

    #[test]
    fn singlet_reduces_to_maximally_mixed() {
        let s = density_from_ket(&singlet()).unwrap();
        let a = partial_trace(&s, BipartiteSplit::two_qubits(), Subsystem::A).unwrap();
        assert!(
            a.matrix()
                .max_abs_diff(&ComplexMatrix::identity(2).scale_real(0.5))
                < 1e-15
        );
    }

    #[test]
    fn product_state_reduces_to_factor() {
        let up = density_from_ket(&basis_ket(4, 0).unwrap()).unwrap();
        let b = partial_trace(&up, BipartiteSplit::two_qubits(), Subsystem::B).unwrap();
        assert_eq!(*b.matrix(), ComplexMatrix::diag_real(&[1.0, 0.0]));
    }

    #[test]
    fn inconsistent_split_rejected() {
        let up = density_from_ket(&basis_ket(4, 0).unwrap()).unwrap();
        let split = BipartiteSplit::new(2, 3).unwrap();
        assert!(matches!(
            partial_trace(&up, split, Subsystem::A),
            Err(crate::Error::Argument(_))
        ));
    }

    #[test]
    fn maximally_mixed_purifies_to_bell_pair() {
        let half = DensityMatrix::maximally_mixed(2);
        let joint = purify(&half).unwrap();
        assert_eq!(joint.dim(), 4);
        // Schmidt coefficients are the singular values of the 2x2 amplitude matrix.
        let m = ComplexMatrix::from_row_major(2, 2, joint.amplitudes().to_vec()).unwrap();
        let svals = eigvals_hermitian(&(&m.adjoint() * &m)).unwrap();
        for s in svals {
            assert!((s.sqrt() - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
        }
    }

    #[test]
    fn pure_input_purifies_to_product_with_ancilla_zero() {
        let s = density_from_ket(&singlet()).unwrap();
        let joint = purify(&s).unwrap();
        let expected = crate::qcore::tensor_kets(&singlet(), &basis_ket(4, 0).unwrap());
        let overlap = expected.inner(&joint).unwrap();
        assert!((overlap - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn purity_and_distance_basics() {
        let mixed = DensityMatrix::maximally_mixed(4);
        assert!((purity(&mixed) - 0.25).abs() < 1e-15);
        assert_eq!(trace_distance(&mixed, &mixed).unwrap(), 0.0);
        assert!((von_neumann_entropy(&mixed) - 2.0).abs() < 1e-12);
        let up = density_from_ket(&basis_ket(4, 0).unwrap()).unwrap();
        assert!(von_neumann_entropy(&up).abs() < 1e-12);
        assert!((trace_distance(&up, &mixed).unwrap() - 0.75).abs() < 1e-12);
    }

    #[test]
    fn dimension_mismatches() {
        let a = DensityMatrix::maximally_mixed(2);
        let b = DensityMatrix::maximally_mixed(4);
        assert!(trace_distance(&a, &b).is_err());
        assert!(fidelity_with_ket(&a, &singlet()).is_err());
        let obs = Observable::new(ComplexMatrix::identity(4)).unwrap();
        assert!(expectation(&a, &obs).is_err());
    }
}
