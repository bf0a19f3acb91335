//! Even factors: spanning subgraphs in which every vertex has nonzero even
//! degree.

mod cycle_space;
mod yan_kano;

pub use cycle_space::{cycle_space_dimension, find_even_factor, find_even_factor_with_cancel};
pub use yan_kano::{yan_kano_check, YanKano};

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph};
use serde::{Deserialize, Serialize};

pub const DEFAULT_DIM_BUDGET: usize = 24;
pub const DEFAULT_SUBSET_BUDGET: usize = 20;
/// Edge limit for [`naive_even_factor`].
pub const MAX_NAIVE_EDGES: usize = 20;

/// Edge set of an even factor, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenFactorWitness {
    edges: Vec<Edge>,
}

impl EvenFactorWitness {
    pub fn new(edges: impl IntoIterator<Item = Edge>) -> Self {
        let mut edges: Vec<Edge> = edges.into_iter().map(|(u, v)| edge(u, v)).collect();
        edges.sort_unstable();
        edges.dedup();
        EvenFactorWitness { edges }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Existence {
    Yes,
    No,
    /// The search budget was exceeded or the search was cancelled.
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FactorMethod {
    CycleSpace,
    Naive,
    YanKanoImplied,
}

/// Outcome of an even-factor decision. Yes-verdicts from the search methods
/// carry a witness; [`FactorMethod::YanKanoImplied`] verdicts do not.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorVerdict {
    pub exists: Existence,
    pub witness: Option<EvenFactorWitness>,
    pub method: FactorMethod,
}

impl FactorVerdict {
    fn yes(witness: EvenFactorWitness, method: FactorMethod) -> Self {
        FactorVerdict {
            exists: Existence::Yes,
            witness: Some(witness),
            method,
        }
    }

    fn bare(exists: Existence, method: FactorMethod) -> Self {
        FactorVerdict {
            exists,
            witness: None,
            method,
        }
    }
}

/// Whether `f` is an even factor of `g`. Every edge of `f` must be an edge
/// of `g`; repeated edges count once.
pub fn verify_even_factor(g: &Graph, f: &[Edge]) -> Result<bool> {
    let w = EvenFactorWitness::new(f.iter().copied());
    let mut deg = vec![0usize; g.order()];
    for &(u, v) in w.edges() {
        if !g.has_edge(u, v) {
            return Err(Error::EdgeNotInGraph(u, v));
        }
        deg[u] += 1;
        deg[v] += 1;
    }
    Ok(deg.iter().all(|&d| d > 0 && d % 2 == 0))
}

/// Exhaustive search over all `2^m` edge subsets.
pub fn naive_even_factor(g: &Graph) -> Result<FactorVerdict> {
    let edges: Vec<Edge> = g.edges().collect();
    if edges.len() > MAX_NAIVE_EDGES {
        return Err(Error::UnsupportedSize {
            what: "naive even-factor search (edges)",
            size: edges.len(),
            max: MAX_NAIVE_EDGES,
        });
    }
    if g.order() == 0 {
        return Ok(FactorVerdict::yes(EvenFactorWitness::new([]), FactorMethod::Naive));
    }
    let mut incidence = vec![0u32; g.order()];
    for (k, &(u, v)) in edges.iter().enumerate() {
        incidence[u] |= 1 << k;
        incidence[v] |= 1 << k;
    }
    for mask in 1u32..(1u32 << edges.len()) {
        let ok = incidence.iter().all(|&inc| {
            let d = (mask & inc).count_ones();
            d > 0 && d % 2 == 0
        });
        if ok {
            let chosen = (0..edges.len()).filter(|k| (mask >> k) & 1 == 1).map(|k| edges[k]);
            return Ok(FactorVerdict::yes(EvenFactorWitness::new(chosen), FactorMethod::Naive));
        }
    }
    Ok(FactorVerdict::bare(Existence::No, FactorMethod::Naive))
}

/// Cheapest-first decision: a vertex of degree below 2 settles "no"; the
/// odd-component condition on an even number (≥ 4) of vertices settles
/// "yes"; otherwise the cycle space is searched within `dim_budget`.
pub fn decide_even_factor(g: &Graph, dim_budget: usize, subset_budget: usize) -> FactorVerdict {
    if g.order() > 0 && g.min_degree() < 2 {
        return FactorVerdict::bare(Existence::No, FactorMethod::CycleSpace);
    }
    if let Some(v) = yan_kano::implied_verdict(g, subset_budget) {
        return v;
    }
    find_even_factor(g, dim_budget)
}
