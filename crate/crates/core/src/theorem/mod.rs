//! The spectral even-factor condition: order thresholds, the extremal graph
//! `G* = K_δ ∨ (K_{n−2δ+1} ∪ (δ−1)K_1)`, per-graph classification, corpus
//! runs, and numerical checks of the individual proof steps.
//!
//! The statement under test: a connected graph `G` of even order `n` with
//! minimum degree `δ ≥ 2` and `n ≥ min_order(α, δ)` satisfying
//! `ρ_α(G) ≥ ρ_α(G*)` has an even factor unless `G ≅ G*`.

mod classify;
mod exact;
mod proof;

pub use classify::{
    applicability, classify, verify_corpus, write_jsonl, write_summary_csv, AlphaSummary, ClassifyOptions,
    CorpusError, CorpusReport, VerdictRecord,
};
pub use exact::{parse_rational, to_f64};
pub use proof::{
    case3_radius_gap, case3_surgery, f_case1, f_case1_exact, merge_bound_check, subcase_positivity_scan,
    Case3Gap, Case3Surgery, MergeComparison, SubcaseScan, SubcaseViolation,
};

use crate::error::{Error, Result};
use crate::graph::{build_join_union, Graph, JoinUnionSpec};
use crate::quotient::{charpoly_join, largest_real_root};
use crate::spectral::Alpha;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

/// Residual tolerance for every spectral radius computed in this module.
pub const RADIUS_TOL: f64 = 1e-11;

fn check_delta(delta: usize) -> Result<()> {
    if delta < 2 {
        return Err(Error::Precondition(format!("need δ ≥ 2, got {delta}")));
    }
    Ok(())
}

/// Smallest order the condition applies to:
/// `7δ−7` on `[0, 1/2]`, `8δ−8` on `(1/2, 2/3]`, `(3δ−3)/(1−α)` on `(2/3, 1)`.
pub fn min_order(a: Alpha, delta: usize) -> Result<f64> {
    check_delta(delta)?;
    let (al, d) = (a.value(), delta as f64);
    if al >= 1.0 {
        return Err(Error::AlphaOutOfRange(al));
    }
    Ok(if al <= 0.5 {
        7.0 * d - 7.0
    } else if al <= 2.0 / 3.0 {
        8.0 * d - 8.0
    } else {
        (3.0 * d - 3.0) / (1.0 - al)
    })
}

/// [`min_order`] in exact arithmetic; `a` must lie in `[0, 1)`.
pub fn min_order_exact(a: &BigRational, delta: usize) -> Result<BigRational> {
    check_delta(delta)?;
    exact::check_unit_interval(a)?;
    let int = |v: i64| BigRational::from_integer(v.into());
    let d = int(delta as i64);
    Ok(if *a <= BigRational::new(1.into(), 2.into()) {
        int(7) * &d - int(7)
    } else if *a <= BigRational::new(2.into(), 3.into()) {
        int(8) * &d - int(8)
    } else {
        (int(3) * &d - int(3)) / (int(1) - a)
    })
}

/// Parameters of `G*(n, δ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalSpec {
    n: usize,
    delta: usize,
}

impl ExtremalSpec {
    /// Requires `n` even, `δ ≥ 2` and `n ≥ 2δ`.
    pub fn new(n: usize, delta: usize) -> Result<Self> {
        check_delta(delta)?;
        if n % 2 == 1 || n < 2 * delta {
            return Err(Error::Precondition(format!(
                "extremal graph needs even n ≥ 2δ, got n = {n}, δ = {delta}"
            )));
        }
        Ok(ExtremalSpec { n, delta })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    /// `K_δ ∨ (K_{n−2δ+1} ∪ (δ−1)K_1)` as a join-union.
    pub fn join_union(&self) -> JoinUnionSpec {
        let mut parts = vec![self.n - 2 * self.delta + 1];
        parts.extend(std::iter::repeat(1).take(self.delta - 1));
        JoinUnionSpec::new(self.delta, parts).expect("all parts positive")
    }
}

/// Join block `0..δ`, big clique next, then the `δ−1` pendant-side vertices.
pub fn build_extremal(spec: ExtremalSpec) -> Graph {
    build_join_union(&spec.join_union())
}

/// `ρ_α(G*)` as the largest root of the quotient cubic.
pub fn rho_star(spec: ExtremalSpec, a: Alpha) -> Result<f64> {
    if a.value() >= 1.0 {
        return Err(Error::AlphaOutOfRange(a.value()));
    }
    let p = charpoly_join(spec.n, spec.delta, a)?;
    largest_real_root(&p, spec.n as f64)
}

/// The spec of `G*` if `g` is isomorphic to one.
///
/// In `G*(n, δ)` the universal vertices are exactly the join block (the big
/// clique has degree `n − δ < n − 1`, the singletons degree `δ < n − 1`), so
/// `g` qualifies iff it has exactly `δ(g)` universal vertices and deleting
/// them leaves disjoint cliques of sizes `n − 2δ + 1` and `δ − 1` times `1`.
pub fn recognize_extremal(g: &Graph) -> Option<ExtremalSpec> {
    let n = g.order();
    let spec = ExtremalSpec::new(n, g.min_degree()).ok()?;
    let delta = spec.delta;
    let (universal, rest): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| g.degree(v) == n - 1);
    if universal.len() != delta {
        return None;
    }
    let h = g.induced(&rest);
    let mut sizes = Vec::new();
    for comp in h.components() {
        if comp.iter().any(|&v| h.degree(v) != comp.len() - 1) {
            return None;
        }
        sizes.push(comp.len());
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    (sizes == spec.join_union().parts()).then_some(spec)
}
