use crate::error::{argument, validation, Result};
use crate::qcore::{pauli, singlet, ComplexMatrix, DensityMatrix};
use crate::VALIDATION_TOL;

/// Quantum channel in operator-sum form `ρ ↦ Σ Kᵢ ρ Kᵢ†`.
///
/// Construction only checks shapes; trace preservation is checked by
/// [`KrausChannel::verify_cptp`] and enforced by [`KrausChannel::apply`].
#[derive(Debug, Clone, PartialEq)]
pub struct KrausChannel {
    dim: usize,
    ops: Vec<ComplexMatrix>,
}

impl KrausChannel {
    pub fn new(ops: Vec<ComplexMatrix>) -> Result<Self> {
        let first = ops
            .first()
            .ok_or_else(|| argument("channel needs at least one Kraus operator"))?;
        let dim = first.rows();
        if let Some(bad) = ops.iter().find(|k| k.rows() != dim || k.cols() != dim) {
            return Err(argument(format!(
                "Kraus operator of shape {}x{} in a dim-{dim} channel",
                bad.rows(),
                bad.cols()
            )));
        }
        Ok(Self { dim, ops })
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            dim,
            ops: vec![ComplexMatrix::identity(dim)],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kraus_ops(&self) -> &[ComplexMatrix] {
        &self.ops
    }

    /// `‖Σ K†K − I‖_max`.
    pub fn completeness_defect(&self) -> f64 {
        let mut sum = ComplexMatrix::zeros(self.dim, self.dim);
        for k in &self.ops {
            sum = &sum + &(&k.adjoint() * k);
        }
        sum.max_abs_diff(&ComplexMatrix::identity(self.dim))
    }

    pub fn verify_cptp(&self, tol: f64) -> bool {
        self.completeness_defect() <= tol
    }

    pub fn apply(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        if rho.dim() != self.dim {
            return Err(argument(format!(
                "channel of dim {} applied to state of dim {}",
                self.dim,
                rho.dim()
            )));
        }
        let defect = self.completeness_defect();
        if defect > VALIDATION_TOL {
            return Err(validation(format!(
                "channel is not trace preserving (defect {defect:.3e})"
            )));
        }
        let mut out = ComplexMatrix::zeros(self.dim, self.dim);
        for k in &self.ops {
            out = &out + &rho.matrix().conjugate_by(k);
        }
        DensityMatrix::from_hermitian_part(&out)
    }

    /// Sequential composition: `self` first, then `next`.
    pub fn then(&self, next: &KrausChannel) -> Result<KrausChannel> {
        if self.dim != next.dim {
            return Err(argument("cannot compose channels of different dimension"));
        }
        let ops = next
            .ops
            .iter()
            .flat_map(|b| self.ops.iter().map(move |a| b * a))
            .collect();
        KrausChannel::new(ops)
    }
}

/// Single Kraus operator `U ⊗ U`: the same unitary on both spins.
pub fn collective_unitary(u: &ComplexMatrix) -> Result<KrausChannel> {
    if u.rows() != 2 || u.cols() != 2 {
        return Err(argument("collective unitary must be 2x2"));
    }
    let defect = u.unitarity_defect();
    if defect > VALIDATION_TOL {
        return Err(argument(format!(
            "matrix is not unitary (defect {defect:.3e})"
        )));
    }
    KrausChannel::new(vec![u.kron(u)])
}

/// Dephasing between the singlet and triplet blocks: Kraus set
/// `{P_s, I − P_s}` with `P_s = |Ψ⁻⟩⟨Ψ⁻|`.
pub fn block_dephasing() -> KrausChannel {
    let ps = singlet().projector();
    let pt = &ComplexMatrix::identity(4) - &ps;
    KrausChannel {
        dim: 4,
        ops: vec![ps, pt],
    }
}

/// Two-qubit depolarizing channel `ρ ↦ (1 − q)ρ + q I/4`, built from the 16
/// Pauli products `σᵢ ⊗ σⱼ`: identity weight `√(1 − 15q/16)`, the other 15
/// weight `√(q/16)`.
pub fn depolarizing(q: f64) -> Result<KrausChannel> {
    if !(0.0..=1.0).contains(&q) {
        return Err(argument(format!(
            "depolarizing strength {q} outside [0, 1]"
        )));
    }
    let paulis = pauli::all();
    let mut ops = Vec::with_capacity(16);
    for (i, a) in paulis.iter().enumerate() {
        for (j, b) in paulis.iter().enumerate() {
            let w = if i == 0 && j == 0 {
                (1.0 - 15.0 * q / 16.0).sqrt()
            } else {
                (q / 16.0).sqrt()
            };
            ops.push(a.kron(b).scale_real(w));
        }
    }
    KrausChannel::new(ops)
}
