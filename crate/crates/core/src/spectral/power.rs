//! Spectral radius of `A_α(G)` by shifted power iteration.
//!
//! Iterates on `A_α + I` from the all-ones vector. The shift makes the
//! dominant eigenvalue strictly dominant in modulus, so bipartite graphs at
//! `α = 0` converge as well. For disconnected graphs the iteration converges
//! to the largest eigenvalue over all components.

use super::{alpha_matrix, alpha_mul, eigen_decomposition, Alpha};
use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::Serialize;

pub const DEFAULT_TOL: f64 = 1e-10;
const ITERATIONS_PER_VERTEX: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EigenMethod {
    PowerIteration,
    Jacobi,
}

#[derive(Debug, Clone)]
pub struct SpectralResult {
    pub radius: f64,
    /// Unit-norm, entrywise nonnegative.
    pub perron: Vec<f64>,
    /// `‖A_α x − ρ x‖₂` for the returned pair.
    pub residual: f64,
    pub iterations: usize,
    pub method: EigenMethod,
}

fn norm(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

fn residual(g: &Graph, a: Alpha, x: &[f64], rho: f64) -> f64 {
    let mut y = vec![0.0; x.len()];
    alpha_mul(g, a, x, &mut y);
    y.iter().zip(x).map(|(yi, xi)| (yi - rho * xi).powi(2)).sum::<f64>().sqrt()
}

/// Largest eigenvalue of `A_α(G)` with its Perron vector. Stops when the
/// eigen-residual is at most `tol`; fails after `200·n` iterations.
pub fn spectral_radius(g: &Graph, a: Alpha, tol: f64) -> Result<SpectralResult> {
    let n = g.order();
    if n == 0 {
        return Err(Error::Precondition("spectral radius of the empty graph".into()));
    }
    if !(tol > 0.0) {
        return Err(Error::Precondition("tolerance must be positive".into()));
    }
    let cap = ITERATIONS_PER_VERTEX * n;
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut y = vec![0.0; n];
    let mut last = f64::INFINITY;
    for it in 1..=cap {
        alpha_mul(g, a, &x, &mut y);
        let rho: f64 = x.iter().zip(&y).map(|(p, q)| p * q).sum();
        let r = y.iter().zip(&x).map(|(yi, xi)| (yi - rho * xi).powi(2)).sum::<f64>().sqrt();
        if r <= tol {
            return Ok(SpectralResult {
                radius: rho,
                perron: x,
                residual: r,
                iterations: it,
                method: EigenMethod::PowerIteration,
            });
        }
        last = r;
        for (yi, xi) in y.iter_mut().zip(&x) {
            *yi += xi;
        }
        let s = norm(&y);
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / s;
        }
    }
    Err(Error::NonConvergence {
        iterations: cap,
        residual: last,
    })
}

/// [`spectral_radius`], falling back to a dense Jacobi eigendecomposition
/// when the power iteration stalls (eigenvalue gaps too small for the
/// iteration cap).
pub fn perron_pair(g: &Graph, a: Alpha, tol: f64) -> Result<SpectralResult> {
    match spectral_radius(g, a, tol) {
        Err(Error::NonConvergence { .. }) => {}
        other => return other,
    }
    let jacobi_tol = (tol * 1e-2).max(super::JACOBI_ROTATION_THRESHOLD * g.order() as f64);
    let ed = eigen_decomposition(&alpha_matrix(g, a), jacobi_tol)?;
    let radius = ed.values[0];
    // the top eigenspace is spanned by component Perron vectors with disjoint
    // supports, so the entrywise modulus is again an eigenvector
    let mut perron: Vec<f64> = ed.vectors[0].iter().map(|v| v.abs()).collect();
    let s = norm(&perron);
    perron.iter_mut().for_each(|v| *v /= s);
    let res = residual(g, a, &perron, radius);
    if res > tol {
        return Err(Error::NonConvergence {
            iterations: ed.sweeps,
            residual: res,
        });
    }
    Ok(SpectralResult {
        radius,
        perron,
        residual: res,
        iterations: ed.sweeps,
        method: EigenMethod::Jacobi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{random_graph, Graph};
    use crate::spectral::full_spectrum;
    use proptest::prelude::*;

    fn alpha(v: f64) -> Alpha {
        Alpha::new(v).unwrap()
    }

    #[test]
    fn complete_and_cycle() {
        for n in 2..12 {
            for a in [0.0, 0.3, 0.9] {
                let r = spectral_radius(&Graph::complete(n), alpha(a), DEFAULT_TOL).unwrap();
                assert!((r.radius - (n as f64 - 1.0)).abs() < 1e-10);
            }
        }
        for n in 3..12 {
            let r = spectral_radius(&Graph::cycle(n), alpha(0.0), DEFAULT_TOL).unwrap();
            assert!((r.radius - 2.0).abs() < 1e-10);
        }
    }

    #[test]
    fn star_bipartite_at_alpha_zero() {
        let r = spectral_radius(&Graph::star(3), alpha(0.0), DEFAULT_TOL).unwrap();
        assert!((r.radius - 3f64.sqrt()).abs() < 1e-9);
        assert!(r.perron.iter().all(|&v| v > 0.0));
        assert!(r.residual <= DEFAULT_TOL);
    }

    #[test]
    fn disconnected_takes_largest_component() {
        // K4 plus a disjoint triangle
        let mut g = Graph::empty(7);
        for (u, v) in Graph::complete(4).edges() {
            g.add_edge(u, v);
        }
        g.add_edge(4, 5);
        g.add_edge(5, 6);
        g.add_edge(4, 6);
        let r = spectral_radius(&g, alpha(0.2), DEFAULT_TOL).unwrap();
        assert!((r.radius - 3.0).abs() < 1e-10);
    }

    #[test]
    fn edgeless_and_single_vertex() {
        assert_eq!(spectral_radius(&Graph::empty(1), alpha(0.5), 1e-10).unwrap().radius, 0.0);
        assert_eq!(spectral_radius(&Graph::empty(4), alpha(0.5), 1e-10).unwrap().radius, 0.0);
        assert!(spectral_radius(&Graph::empty(0), alpha(0.5), 1e-10).is_err());
        assert!(spectral_radius(&Graph::empty(2), alpha(0.5), 0.0).is_err());
    }

    #[test]
    fn stalled_iteration_reports_residual() {
        // two K8 joined by one edge: λ₂ sits just below ρ
        let mut g = Graph::empty(16);
        for u in 0..8 {
            for v in u + 1..8 {
                g.add_edge(u, v);
                g.add_edge(u + 8, v + 8);
            }
        }
        g.add_edge(0, 8);
        match spectral_radius(&g, alpha(0.0), 1e-14) {
            Err(Error::NonConvergence { iterations, residual }) => {
                assert_eq!(iterations, 3200);
                assert!(residual > 1e-14);
            }
            Ok(r) => assert!(r.residual <= 1e-14),
            Err(e) => panic!("unexpected {e}"),
        }
        let r = perron_pair(&g, alpha(0.0), 1e-10).unwrap();
        let dense = full_spectrum(&alpha_matrix(&g, alpha(0.0)), 1e-12).unwrap()[0];
        assert!((r.radius - dense).abs() < 1e-9);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn agrees_with_jacobi(n in 1usize..=20, seed in any::<u64>(), ai in 0usize..5) {
            let a = alpha([0.0, 0.25, 0.5, 0.75, 0.95][ai]);
            let g = random_graph(n, 0.35, seed);
            let tol = DEFAULT_TOL;
            let r = perron_pair(&g, a, tol).unwrap();
            let top = full_spectrum(&alpha_matrix(&g, a), tol).unwrap()[0];
            prop_assert!((r.radius - top).abs() <= 10.0 * tol, "{} vs {}", r.radius, top);
            prop_assert!(r.residual <= tol);
            prop_assert!(r.radius >= g.min_degree() as f64 - 1e-9);
            prop_assert!(r.radius <= g.max_degree() as f64 + 1e-9);
            prop_assert!(r.perron.iter().all(|&v| v >= 0.0));
            prop_assert!((norm(&r.perron) - 1.0).abs() < 1e-12);
        }
    }
}
