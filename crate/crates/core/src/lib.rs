//! A_α spectral radii of small graphs, equitable quotient matrices, exact
//! even-factor oracles, and a verification harness for the spectral
//! even-factor condition built on the extremal graph
//! `K_δ ∨ (K_{n−2δ+1} ∪ (δ−1)K_1)`.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: dense labeled graphs, graph6 I/O, the join-union family,
//!   enumeration, sampling and small-graph isomorphism.
//! * [`spectral`]: the `A_α` matrix, power iteration and a cyclic Jacobi
//!   eigensolver.
//! * [`quotient`]: equitable partitions, quotient matrices and the closed-form
//!   characteristic cubic of the three-cell join-union quotient.
//! * [`factor`]: even-factor existence by cycle-space enumeration, brute force,
//!   and the odd-component sufficient condition.
//! * [`theorem`]: order thresholds, the extremal graph, per-graph
//!   classification, corpus runs, and numerical checks of the proof steps.

pub mod error;
pub mod factor;
pub mod graph;
pub mod quotient;
pub mod spectral;
pub mod theorem;

pub use error::{Error, Result};
pub use graph::{Graph, JoinUnionSpec, VertexSubset};
pub use spectral::{Alpha, DenseSymMatrix, SpectralResult};
