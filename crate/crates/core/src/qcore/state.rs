use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use super::eigen::eigvals_hermitian;
use super::ComplexMatrix;
use crate::error::{argument, validation, Result};
use crate::VALIDATION_TOL;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Normalized ket.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: Vec<Complex64>,
}

impl PureState {
    /// Wraps an amplitude vector, requiring unit norm within 1e-10.
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(argument("a ket needs at least one amplitude"));
        }
        if amplitudes
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(validation("ket has non-finite amplitudes"));
        }
        let norm = norm2(&amplitudes);
        if (norm - 1.0).abs() > VALIDATION_TOL {
            return Err(validation(format!("ket is not normalized (norm {norm})")));
        }
        Ok(Self { amplitudes })
    }

    /// Rescales to unit norm. Fails only for the zero vector.
    pub fn normalized(amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm = norm2(&amplitudes);
        if !norm.is_finite() || norm <= 0.0 {
            return Err(validation("cannot normalize a zero or non-finite vector"));
        }
        Self::new(amplitudes.into_iter().map(|z| z / norm).collect())
    }

    pub fn from_real(amplitudes: &[f64]) -> Result<Self> {
        Self::new(amplitudes.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &PureState) -> Result<Complex64> {
        if self.dim() != other.dim() {
            return Err(argument(format!(
                "inner product of kets with dims {} and {}",
                self.dim(),
                other.dim()
            )));
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    pub fn norm(&self) -> f64 {
        norm2(&self.amplitudes)
    }

    pub fn projector(&self) -> ComplexMatrix {
        ComplexMatrix::outer(&self.amplitudes, &self.amplitudes)
    }
}

fn norm2(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Hermitian, positive semidefinite, unit-trace matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    /// Validates Hermiticity, unit trace and positivity at 1e-10.
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(argument(format!(
                "density matrix must be square, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        if !matrix.is_finite() {
            return Err(validation("density matrix has non-finite entries"));
        }
        let defect = matrix.hermiticity_defect();
        if defect > VALIDATION_TOL {
            return Err(validation(format!("not Hermitian (defect {defect:.3e})")));
        }
        let tr = matrix.trace();
        if (tr - ONE).norm() > VALIDATION_TOL {
            return Err(validation(format!("trace is {} , expected 1", tr.re)));
        }
        let min = eigvals_hermitian(&matrix)?.first().copied().unwrap_or(0.0);
        if min < -VALIDATION_TOL {
            return Err(validation(format!(
                "not positive semidefinite (min eigenvalue {min:.3e})"
            )));
        }
        Ok(Self { matrix })
    }

    /// Replaces the matrix by its exact Hermitian part, then validates.
    /// Used on the output of arithmetic that may have drifted by rounding.
    pub fn from_hermitian_part(matrix: &ComplexMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(argument("density matrix must be square"));
        }
        Self::new(matrix.hermitian_part())
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        assert!(dim > 0);
        Self {
            matrix: ComplexMatrix::identity(dim).scale_real(1.0 / dim as f64),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    /// Ascending spectrum.
    pub fn eigenvalues(&self) -> Vec<f64> {
        eigvals_hermitian(&self.matrix).expect("validated density matrix is Hermitian")
    }
}

/// Hermitian operator.
#[derive(Debug, Clone, PartialEq)]
pub struct Observable {
    matrix: ComplexMatrix,
}

impl Observable {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(argument("observable must be square"));
        }
        let defect = matrix.hermiticity_defect();
        if defect > VALIDATION_TOL {
            return Err(validation(format!(
                "observable is not Hermitian (defect {defect:.3e})"
            )));
        }
        Ok(Self { matrix })
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }
}

/// Factorization `dim = dim_a × dim_b`, first factor slowest-varying.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BipartiteSplit {
    pub dim_a: usize,
    pub dim_b: usize,
}

impl BipartiteSplit {
    pub fn new(dim_a: usize, dim_b: usize) -> Result<Self> {
        if dim_a == 0 || dim_b == 0 {
            return Err(argument("split factors must be positive"));
        }
        Ok(Self { dim_a, dim_b })
    }

    pub fn two_qubits() -> Self {
        Self { dim_a: 2, dim_b: 2 }
    }

    pub fn total(&self) -> usize {
        self.dim_a * self.dim_b
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BellSign {
    Plus,
    Minus,
}

pub fn basis_ket(dim: usize, index: usize) -> Result<PureState> {
    if index >= dim {
        return Err(argument(format!(
            "basis index {index} out of range for dim {dim}"
        )));
    }
    let mut amps = vec![ZERO; dim];
    amps[index] = ONE;
    PureState::new(amps)
}

/// `|Ψ±⟩ = (|01⟩ ± |10⟩)/√2`.
pub fn bell_psi(sign: BellSign) -> PureState {
    let s = match sign {
        BellSign::Plus => FRAC_1_SQRT_2,
        BellSign::Minus => -FRAC_1_SQRT_2,
    };
    PureState::from_real(&[0.0, FRAC_1_SQRT_2, s, 0.0]).expect("Bell ket is normalized")
}

/// The singlet `|Ψ⁻⟩`.
pub fn singlet() -> PureState {
    bell_psi(BellSign::Minus)
}

/// Equal-weight superposition of the singlet and the three triplet vectors,
/// `|Ψ⁻⟩/2 + (|Ψ⁺⟩ + |00⟩ + |11⟩)/2`.
pub fn gas_pure_state() -> PureState {
    let minus = bell_psi(BellSign::Minus);
    let plus = bell_psi(BellSign::Plus);
    let up = basis_ket(4, 0).unwrap();
    let down = basis_ket(4, 3).unwrap();
    let amps = (0..4)
        .map(|i| {
            (minus.amplitudes()[i]
                + plus.amplitudes()[i]
                + up.amplitudes()[i]
                + down.amplitudes()[i])
                * 0.5
        })
        .collect();
    PureState::normalized(amps).expect("non-zero superposition")
}

/// `|k⟩⟨k|`.
pub fn density_from_ket(k: &PureState) -> Result<DensityMatrix> {
    let norm = k.norm();
    if (norm - 1.0).abs() > VALIDATION_TOL {
        return Err(validation(format!("ket is not normalized (norm {norm})")));
    }
    Ok(DensityMatrix {
        matrix: k.projector(),
    })
}

/// Kronecker product `a ⊗ b`.
pub fn tensor(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    a.kron(b)
}

/// Ket tensor product `|a⟩ ⊗ |b⟩`.
pub fn tensor_kets(a: &PureState, b: &PureState) -> PureState {
    let amps = a
        .amplitudes()
        .iter()
        .flat_map(|x| b.amplitudes().iter().map(move |y| x * y))
        .collect();
    PureState::normalized(amps).expect("product of unit kets")
}
