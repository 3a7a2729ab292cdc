//! Cyclic complex Jacobi eigensolver for small Hermitian matrices.

use num_complex::Complex64;

use super::ComplexMatrix;
use crate::error::{argument, Result};
use crate::VALIDATION_TOL;

const MAX_SWEEPS: usize = 100;
const OFF_DIAGONAL_TOL: f64 = 1e-13;

/// Eigen-decomposition of a Hermitian matrix.
///
/// `values` are ascending; column `j` of `vectors` is the unit eigenvector
/// for `values[j]`, with its phase fixed so that the first entry of largest
/// modulus is real and positive.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl HermitianEigen {
    pub fn vector(&self, j: usize) -> Vec<Complex64> {
        (0..self.vectors.rows())
            .map(|r| self.vectors[(r, j)])
            .collect()
    }
}

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn eigvals_hermitian(m: &ComplexMatrix) -> Result<Vec<f64>> {
    eigh(m).map(|e| e.values)
}

pub fn eigh(m: &ComplexMatrix) -> Result<HermitianEigen> {
    if !m.is_square() {
        return Err(argument(format!(
            "eigensolver needs a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    if !m.is_finite() {
        return Err(argument("eigensolver input has non-finite entries"));
    }
    let defect = m.hermiticity_defect();
    if defect > VALIDATION_TOL {
        return Err(argument(format!(
            "matrix is not Hermitian (defect {defect:.3e})"
        )));
    }

    let n = m.rows();
    let mut a = m.hermitian_part();
    let mut v = ComplexMatrix::identity(n);
    let scale = a.frobenius_norm().max(1.0);

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) < OFF_DIAGONAL_TOL * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let mut vectors = ComplexMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        let col: Vec<Complex64> = (0..n).map(|r| v[(r, src)]).collect();
        let phase = gauge_phase(&col);
        for r in 0..n {
            vectors[(r, dst)] = col[r] * phase;
        }
    }
    Ok(HermitianEigen { values, vectors })
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut acc = 0.0;
    for r in 0..n {
        for c in 0..n {
            if r != c {
                acc += a[(r, c)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// One Jacobi step zeroing `a[p][q]`: a phase on `q` makes the pivot real,
/// then a real Givens rotation diagonalizes the 2×2 block.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let b = a[(p, q)];
    let mag = b.norm();
    if mag < f64::MIN_POSITIVE {
        return;
    }
    let phase_conj = (b / mag).conj();
    let theta = (a[(q, q)].re - a[(p, p)].re) / (2.0 * mag);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
        sign / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    let g_pp = Complex64::new(c, 0.0);
    let g_pq = Complex64::new(s, 0.0);
    let g_qp = phase_conj * -s;
    let g_qq = phase_conj * c;

    let n = a.rows();
    for k in 0..n {
        let (akp, akq) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = akp * g_pp + akq * g_qp;
        a[(k, q)] = akp * g_pq + akq * g_qq;
    }
    for k in 0..n {
        let (apk, aqk) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = g_pp.conj() * apk + g_qp.conj() * aqk;
        a[(q, k)] = g_pq.conj() * apk + g_qq.conj() * aqk;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)].im = 0.0;
    a[(q, q)].im = 0.0;

    for k in 0..n {
        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
        v[(k, p)] = vkp * g_pp + vkq * g_qp;
        v[(k, q)] = vkp * g_pq + vkq * g_qq;
    }
}

fn gauge_phase(col: &[Complex64]) -> Complex64 {
    let max = col.iter().map(|z| z.norm()).fold(0.0, f64::max);
    match col.iter().find(|z| z.norm() >= max - 1e-12) {
        Some(z) if z.norm() > 0.0 => z.conj() / z.norm(),
        _ => Complex64::new(1.0, 0.0),
    }
}
