#![allow(dead_code)]

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use water_spin::channels::KrausChannel;
use water_spin::qcore::{ComplexMatrix, DensityMatrix};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gaussian_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| {
        Complex64::new(StandardNormal.sample(rng), StandardNormal.sample(rng))
    })
}

/// `G G† / Tr(G G†)` with Gaussian `G` of the given rank.
pub fn random_density(rng: &mut ChaCha8Rng, dim: usize, rank: usize) -> DensityMatrix {
    let g = gaussian_matrix(rng, dim, rank);
    let m = &g * &g.adjoint();
    let tr = m.trace().re;
    DensityMatrix::from_hermitian_part(&m.scale_real(1.0 / tr)).unwrap()
}

pub fn random_hermitian(rng: &mut ChaCha8Rng, dim: usize) -> ComplexMatrix {
    gaussian_matrix(rng, dim, dim).hermitian_part()
}

/// Orthonormalizes the columns of a tall Gaussian matrix (Gram–Schmidt) and
/// cuts the resulting isometry into `n_ops` Kraus operators.
pub fn random_channel(rng: &mut ChaCha8Rng, dim: usize, n_ops: usize) -> KrausChannel {
    let rows = dim * n_ops;
    let g = gaussian_matrix(rng, rows, dim);
    let mut cols: Vec<Vec<Complex64>> = Vec::new();
    for c in 0..dim {
        let mut v: Vec<Complex64> = (0..rows).map(|r| g[(r, c)]).collect();
        for u in &cols {
            let proj: Complex64 = u.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
            for (vi, ui) in v.iter_mut().zip(u) {
                *vi -= proj * ui;
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        cols.push(v.into_iter().map(|z| z / norm).collect());
    }
    let ops = (0..n_ops)
        .map(|k| ComplexMatrix::from_fn(dim, dim, |r, c| cols[c][k * dim + r]))
        .collect();
    KrausChannel::new(ops).unwrap()
}
