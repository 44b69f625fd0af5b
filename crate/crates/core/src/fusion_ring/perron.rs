use super::FusionRing;
use crate::error::{Error, Result};

const TOLERANCE: f64 = 1e-13;
const MAX_ITERATIONS: usize = 1_000_000;

/// Frobenius–Perron dimension of every label.
///
/// Iterates with `N_i + I` rather than `N_i`: the shift makes the Perron
/// root strictly dominant even when `N_i` is a permutation or has a
/// periodic support, without moving the eigenvectors.
pub fn fp_dims(ring: &FusionRing) -> Result<Vec<f64>> {
    (0..ring.rank()).map(|i| perron_root(ring, i)).collect()
}

/// `sum_i d_i^2`.
pub fn fp_dim_total(ring: &FusionRing) -> Result<f64> {
    Ok(fp_dims(ring)?.iter().map(|d| d * d).sum())
}

fn perron_root(ring: &FusionRing, i: usize) -> Result<f64> {
    let r = ring.rank();
    let m: Vec<Vec<f64>> = (0..r).map(|j| (0..r).map(|k| ring.n(i, j, k) as f64 + f64::from(u8::from(j == k))).collect()).collect();
    let apply = |x: &[f64]| -> Vec<f64> { (0..r).map(|j| (0..r).map(|k| m[j][k] * x[k]).sum()).collect() };
    let mut x = vec![1.0 / (r as f64).sqrt(); r];
    let mut rho = f64::NAN;
    for _ in 0..MAX_ITERATIONS {
        let y = apply(&x);
        let next: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(Error::IllFormed(format!("fusion matrix of {i} is nilpotent")));
        }
        x = y.into_iter().map(|v| v / norm).collect();
        if (next - rho).abs() <= TOLERANCE * next.abs().max(1.0) {
            return Ok(next - 1.0);
        }
        rho = next;
    }
    Err(Error::NonConvergence(MAX_ITERATIONS))
}
