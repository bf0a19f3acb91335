//! The `A_α = αD + (1−α)A` matrix of a graph and its spectrum.

mod jacobi;
mod power;

pub use jacobi::{eigen_decomposition, full_spectrum, EigenDecomposition, JACOBI_ROTATION_THRESHOLD};
pub use power::{perron_pair, spectral_radius, EigenMethod, SpectralResult, DEFAULT_TOL};

use crate::error::{Error, Result};
use crate::graph::{edge, Graph};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Mixing weight of degree against adjacency, in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Alpha(f64);

impl Alpha {
    pub fn new(value: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&value) {
            Ok(Alpha(value))
        } else {
            Err(Error::AlphaOutOfRange(value))
        }
    }

    /// As [`Alpha::new`], but also rejects `α = 1`.
    pub fn below_one(value: f64) -> Result<Self> {
        if (0.0..1.0).contains(&value) {
            Ok(Alpha(value))
        } else {
            Err(Error::AlphaOutOfRange(value))
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    /// `1 − α`, the off-diagonal weight.
    #[inline]
    pub fn complement(self) -> f64 {
        1.0 - self.0
    }
}

/// Dense symmetric matrix in row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseSymMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl DenseSymMatrix {
    pub fn zeros(order: usize) -> Self {
        DenseSymMatrix {
            order,
            entries: vec![0.0; order * order],
        }
    }

    /// Builds from rows; fails unless square and exactly symmetric.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let order = rows.len();
        let mut m = DenseSymMatrix::zeros(order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::DimensionMismatch {
                    expected: order,
                    found: row.len(),
                });
            }
            m.entries[i * order..(i + 1) * order].copy_from_slice(row);
        }
        for i in 0..order {
            for j in 0..i {
                if m.get(i, j) != m.get(j, i) {
                    return Err(Error::Precondition(format!("matrix not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.entries[i * self.order + j] = value;
        self.entries[j * self.order + i] = value;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn row_sum(&self, i: usize) -> f64 {
        self.row(i).iter().sum()
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.order)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn quadratic_form(&self, x: &[f64]) -> f64 {
        self.mul_vec(x).iter().zip(x).map(|(a, b)| a * b).sum()
    }
}

/// `A_α(G)`: diagonal `α·d(i)`, off-diagonal `1−α` on edges.
pub fn alpha_matrix(g: &Graph, a: Alpha) -> DenseSymMatrix {
    let mut m = DenseSymMatrix::zeros(g.order());
    for v in 0..g.order() {
        m.set(v, v, a.value() * g.degree(v) as f64);
    }
    for (u, v) in g.edges() {
        m.set(u, v, a.complement());
    }
    m
}

/// `y = A_α(G)·x` without forming the matrix.
pub(crate) fn alpha_mul(g: &Graph, a: Alpha, x: &[f64], y: &mut [f64]) {
    for v in 0..g.order() {
        let mut acc = 0.0;
        let mut deg = 0usize;
        for u in g.neighbors(v) {
            acc += x[u];
            deg += 1;
        }
        y[v] = a.value() * deg as f64 * x[v] + a.complement() * acc;
    }
}

/// `xᵀ(A_α(after) − A_α(before))x`, summed edge by edge: every edge present
/// only in `after` adds `α(x_u² + x_v²) + 2(1−α)x_u x_v`, every edge present
/// only in `before` subtracts the same amount.
pub fn quadratic_form_delta(g_after: &Graph, g_before: &Graph, x: &[f64], a: Alpha) -> Result<f64> {
    let n = g_before.order();
    if g_after.order() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: g_after.order(),
        });
    }
    if x.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: x.len(),
        });
    }
    let after: BTreeSet<_> = g_after.edges().collect();
    let before: BTreeSet<_> = g_before.edges().collect();
    let contribution = |&(u, v): &(usize, usize)| {
        a.value() * (x[u] * x[u] + x[v] * x[v]) + 2.0 * a.complement() * x[u] * x[v]
    };
    let added: f64 = after.difference(&before).map(contribution).sum();
    let removed: f64 = before.difference(&after).map(contribution).sum();
    Ok(added - removed)
}

/// Signless Laplacian `D + A`.
pub fn signless_laplacian(g: &Graph) -> DenseSymMatrix {
    let mut m = DenseSymMatrix::zeros(g.order());
    for v in 0..g.order() {
        m.set(v, v, g.degree(v) as f64);
    }
    for (u, v) in g.edges() {
        m.set(u, v, 1.0);
    }
    m
}

/// Whether `uv` is a non-edge of `g` between distinct vertices.
pub fn is_non_edge(g: &Graph, u: usize, v: usize) -> bool {
    let (u, v) = edge(u, v);
    u != v && v < g.order() && !g.has_edge(u, v)
}
