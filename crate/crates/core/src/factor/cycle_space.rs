//! Even-factor search over the GF(2) cycle space.
//!
//! Every element of the cycle space has all degrees even, and every
//! all-even edge set is such an element, so a graph has an even factor iff
//! some element covers every vertex. Elements are visited in Gray-code order
//! over the fundamental cycles of a BFS spanning forest, so consecutive
//! elements differ by one fundamental cycle and degrees update incrementally.

use super::{EvenFactorWitness, Existence, FactorMethod, FactorVerdict};
use crate::graph::{Edge, Graph};
use std::sync::atomic::{AtomicBool, Ordering};

const CANCEL_POLL_MASK: u64 = (1 << 12) - 1;

/// `m − n + c`.
pub fn cycle_space_dimension(g: &Graph) -> usize {
    g.size() + g.components().len() - g.order()
}

pub fn find_even_factor(g: &Graph, dim_budget: usize) -> FactorVerdict {
    find_even_factor_with_cancel(g, dim_budget, &AtomicBool::new(false))
}

/// As [`find_even_factor`], returning `Unknown` once `cancel` is observed set.
///
/// Components are searched independently. A component whose cycle-space
/// dimension exceeds `dim_budget` is undecided; the overall verdict is "no"
/// if any decided component has no even factor, otherwise "unknown" if any
/// component is undecided.
pub fn find_even_factor_with_cancel(g: &Graph, dim_budget: usize, cancel: &AtomicBool) -> FactorVerdict {
    let verdict = |exists, witness| FactorVerdict {
        exists,
        witness,
        method: FactorMethod::CycleSpace,
    };
    if (0..g.order()).any(|v| g.degree(v) < 2) {
        return verdict(Existence::No, None);
    }
    let edges: Vec<Edge> = g.edges().collect();
    let mut witness = Vec::new();
    let mut undecided = false;
    for comp in g.components() {
        let cycles = fundamental_cycles(g, &comp, &edges);
        if cycles.len() > dim_budget {
            undecided = true;
            continue;
        }
        match search_component(comp.len(), &cycles, &edges, g.order(), cancel) {
            Search::Found(mut w) => witness.append(&mut w),
            Search::Exhausted => return verdict(Existence::No, None),
            Search::Cancelled => undecided = true,
        }
    }
    if undecided {
        verdict(Existence::Unknown, None)
    } else {
        verdict(Existence::Yes, Some(EvenFactorWitness::new(witness)))
    }
}

enum Search {
    Found(Vec<Edge>),
    Exhausted,
    Cancelled,
}

/// Fundamental cycles of a BFS tree of `comp`, as indices into `edges`.
fn fundamental_cycles(g: &Graph, comp: &[usize], edges: &[Edge]) -> Vec<Vec<usize>> {
    let n = g.order();
    let index = |u: usize, v: usize| edges.binary_search(&(u.min(v), u.max(v))).expect("edge of g");
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut in_tree = vec![false; edges.len()];
    let root = comp[0];
    parent[root] = root;
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for u in g.neighbors(v) {
            if parent[u] == usize::MAX {
                parent[u] = v;
                depth[u] = depth[v] + 1;
                in_tree[index(u, v)] = true;
                queue.push_back(u);
            }
        }
    }
    let mut cycles = Vec::new();
    for (k, &(u, v)) in edges.iter().enumerate() {
        if in_tree[k] || parent[u] == usize::MAX {
            continue;
        }
        let mut cycle = vec![k];
        let (mut a, mut b) = (u, v);
        while a != b {
            if depth[a] < depth[b] {
                std::mem::swap(&mut a, &mut b);
            }
            cycle.push(index(a, parent[a]));
            a = parent[a];
        }
        cycles.push(cycle);
    }
    cycles
}

fn search_component(
    comp_size: usize,
    cycles: &[Vec<usize>],
    edges: &[Edge],
    n: usize,
    cancel: &AtomicBool,
) -> Search {
    let mut chosen = vec![false; edges.len()];
    let mut deg = vec![0usize; n];
    let mut covered = 0usize;
    let total = 1u64 << cycles.len();
    for step in 1..total {
        if step & CANCEL_POLL_MASK == 0 && cancel.load(Ordering::Relaxed) {
            return Search::Cancelled;
        }
        let flip = step.trailing_zeros() as usize;
        for &k in &cycles[flip] {
            let (u, v) = edges[k];
            chosen[k] = !chosen[k];
            for w in [u, v] {
                if chosen[k] {
                    deg[w] += 1;
                    if deg[w] == 1 {
                        covered += 1;
                    }
                } else {
                    deg[w] -= 1;
                    if deg[w] == 0 {
                        covered -= 1;
                    }
                }
            }
        }
        if covered == comp_size {
            let w = (0..edges.len()).filter(|&k| chosen[k]).map(|k| edges[k]).collect();
            return Search::Found(w);
        }
    }
    Search::Exhausted
}
