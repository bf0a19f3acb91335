//! Cyclic-by-row Jacobi eigensolver for dense symmetric matrices.

use super::DenseSymMatrix;
use crate::error::{Error, Result};

/// Off-diagonal entries at or below this magnitude are not rotated.
pub const JACOBI_ROTATION_THRESHOLD: f64 = 1e-13;
const MAX_SWEEPS: usize = 100;

/// Eigenpairs sorted by nonincreasing eigenvalue; `vectors[k]` belongs to
/// `values[k]` and has unit norm.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
    pub sweeps: usize,
}

/// All eigenvalues in nonincreasing order. Terminates once the off-diagonal
/// Frobenius norm is at most `tol`.
pub fn full_spectrum(m: &DenseSymMatrix, tol: f64) -> Result<Vec<f64>> {
    let (a, _, _) = diagonalize(m, tol, false)?;
    let mut values: Vec<f64> = (0..m.order()).map(|i| a[i * m.order() + i]).collect();
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(values)
}

pub fn eigen_decomposition(m: &DenseSymMatrix, tol: f64) -> Result<EigenDecomposition> {
    let n = m.order();
    let (a, v, sweeps) = diagonalize(m, tol, true)?;
    let v = v.expect("vectors requested");
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| a[j * n + j].total_cmp(&a[i * n + i]));
    Ok(EigenDecomposition {
        values: idx.iter().map(|&k| a[k * n + k]).collect(),
        vectors: idx.iter().map(|&k| (0..n).map(|r| v[r * n + k]).collect()).collect(),
        sweeps,
    })
}

fn off_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

type Diagonalized = (Vec<f64>, Option<Vec<f64>>, usize);

fn diagonalize(m: &DenseSymMatrix, tol: f64, want_vectors: bool) -> Result<Diagonalized> {
    if !(tol > 0.0) {
        return Err(Error::Precondition("tolerance must be positive".into()));
    }
    let n = m.order();
    let mut a: Vec<f64> = (0..n * n).map(|k| m.get(k / n.max(1), k % n.max(1))).collect();
    let mut v = want_vectors.then(|| {
        let mut id = vec![0.0; n * n];
        for i in 0..n {
            id[i * n + i] = 1.0;
        }
        id
    });

    for sweep in 0..MAX_SWEEPS {
        let off = off_norm(&a, n);
        if off <= tol {
            return Ok((a, v, sweep));
        }
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() <= JACOBI_ROTATION_THRESHOLD {
                    continue;
                }
                rotated = true;
                let tau = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k * n + p], a[k * n + q]);
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p * n + k], a[q * n + k]);
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                if let Some(v) = v.as_mut() {
                    for k in 0..n {
                        let (vkp, vkq) = (v[k * n + p], v[k * n + q]);
                        v[k * n + p] = c * vkp - s * vkq;
                        v[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
        if !rotated {
            return Err(Error::NonConvergence {
                iterations: sweep + 1,
                residual: off,
            });
        }
    }
    Err(Error::NonConvergence {
        iterations: MAX_SWEEPS,
        residual: off_norm(&a, n),
    })
}
