//! Simple undirected graphs on dense vertex labels `0..n`.

mod enumerate;
mod graph6;
mod iso;
mod random;

pub use enumerate::{enumerate_labeled_graphs, LabeledGraphs, MAX_ENUMERATION_ORDER};
pub use graph6::{parse_graph6, read_graph6_lines, write_graph6, CorpusLine, MAX_GRAPH6_ORDER};
pub use iso::{is_isomorphic_small, MAX_ISOMORPHISM_ORDER};
pub use random::{random_connected_graph, random_graph};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// An undirected edge stored with `u < v`.
pub type Edge = (usize, usize);

/// Normalise an edge so the smaller endpoint comes first.
pub fn edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Simple undirected graph with a bit-packed adjacency matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Precondition(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::Precondition(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            for u in 0..v {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Cycle `0-1-…-(n−1)-0`; for `n < 3` this degenerates to a path.
    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(0, n - 1);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// Star `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::empty(leaves + 1);
        for v in 1..=leaves {
            g.add_edge(0, v);
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && (self.bits[u * self.words + v / 64] >> (v % 64)) & 1 == 1
    }

    /// Inserts `uv`. Panics on out-of-range vertices or a self-loop.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "vertex out of range");
        assert_ne!(u, v, "self-loops are not allowed");
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.bits[u * self.words + v / 64] &= !(1 << (v % 64));
        self.bits[v * self.words + u / 64] &= !(1 << (u % 64));
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Minimum degree; 0 for the empty graph on no vertices.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    /// Neighbourhood bitmask; only meaningful for graphs with at most 64 vertices.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.bits[v * self.words]
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_avoiding(&[])
    }

    fn components_avoiding(&self, removed: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        for &v in removed {
            seen[v] = true;
        }
        let mut comps = Vec::new();
        let mut stack = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            stack.push(start);
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().len() == 1
    }

    /// Graph induced on `vertices`, relabeled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Applies the relabeling `v ↦ perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length");
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }
}

/// Parameters of `K_s ∨ (K_{n₁} ∪ … ∪ K_{n_t})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct JoinUnionSpec {
    s: usize,
    parts: Vec<usize>,
}

impl JoinUnionSpec {
    /// Parts must be positive; they are sorted into nonincreasing order.
    pub fn new(s: usize, mut parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Precondition("clique parts must be at least 1".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(JoinUnionSpec { s, parts })
    }

    pub fn join_size(&self) -> usize {
        self.s
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn order(&self) -> usize {
        self.s + self.parts.iter().sum::<usize>()
    }

    /// `C(s,2) + s·(n−s) + Σ C(nᵢ,2)`.
    pub fn edge_count(&self) -> usize {
        let c2 = |k: usize| k * k.saturating_sub(1) / 2;
        c2(self.s) + self.s * (self.order() - self.s) + self.parts.iter().map(|&p| c2(p)).sum::<usize>()
    }
}

/// Builds `K_s ∨ (K_{n₁} ∪ … ∪ K_{n_t})`: join block on `0..s`, then each part
/// as a contiguous block in spec order.
pub fn build_join_union(spec: &JoinUnionSpec) -> Graph {
    let n = spec.order();
    let mut g = Graph::empty(n);
    for u in 0..spec.s {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    let mut start = spec.s;
    for &p in &spec.parts {
        for u in start..start + p {
            for v in u + 1..start + p {
                g.add_edge(u, v);
            }
        }
        start += p;
    }
    g
}

/// A set of vertices of some graph, kept sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexSubset {
    members: Vec<usize>,
}

impl VertexSubset {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSubset { members }
    }

    pub fn empty() -> Self {
        VertexSubset::default()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn check_within(&self, n: usize) -> Result<()> {
        match self.members.last() {
            Some(&v) if v >= n => Err(Error::Precondition(format!(
                "vertex {v} outside 0..{n}"
            ))),
            _ => Ok(()),
        }
    }
}

/// Number of odd-order components of `G − S`.
pub fn odd_components(g: &Graph, s: &VertexSubset) -> Result<usize> {
    s.check_within(g.order())?;
    Ok(g
        .components_avoiding(s.members())
        .iter()
        .filter(|c| c.len() % 2 == 1)
        .count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn spec(s: usize, parts: &[usize]) -> JoinUnionSpec {
        JoinUnionSpec::new(s, parts.to_vec()).unwrap()
    }

    #[test]
    fn single_part_is_complete() {
        assert_eq!(build_join_union(&spec(0, &[4])), Graph::complete(4));
    }

    #[test]
    fn join_union_edge_counts() {
        let g = build_join_union(&spec(2, &[3, 1]));
        assert_eq!((g.order(), g.size()), (6, 12));
        let g = build_join_union(&spec(2, &[5, 1]));
        assert_eq!((g.order(), g.size()), (8, 23));
    }

    #[test]
    fn empty_spec_is_empty_graph() {
        let g = build_join_union(&spec(0, &[]));
        assert_eq!(g.order(), 0);
        assert!(g.is_connected());
    }

    #[test]
    fn parts_are_sorted() {
        assert_eq!(spec(1, &[1, 3, 2]).parts(), &[3, 2, 1]);
        assert!(JoinUnionSpec::new(1, vec![2, 0]).is_err());
    }

    #[test]
    fn odd_components_examples() {
        let gstar = build_join_union(&spec(2, &[5, 1]));
        assert_eq!(odd_components(&gstar, &VertexSubset::new(vec![0, 1])).unwrap(), 2);
        let c6 = Graph::cycle(6);
        assert_eq!(odd_components(&c6, &VertexSubset::new(vec![0, 3])).unwrap(), 0);
        assert_eq!(odd_components(&Graph::complete(4), &VertexSubset::empty()).unwrap(), 0);
        assert!(odd_components(&c6, &VertexSubset::new(vec![6])).is_err());
    }

    #[test]
    fn neighbors_beyond_one_word() {
        let g = Graph::complete(70);
        assert_eq!(g.degree(69), 69);
        assert_eq!(g.neighbors(3).count(), 69);
        assert_eq!(g.size(), 70 * 69 / 2);
        let c = Graph::cycle(70);
        assert_eq!(c.neighbors(0).collect::<Vec<_>>(), vec![1, 69]);
    }

    #[test]
    fn from_edges_rejects_loops() {
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
    }

    prop_compose! {
        fn arb_spec()(s in 0usize..5, parts in prop::collection::vec(1usize..7, 0..5)) -> JoinUnionSpec {
            JoinUnionSpec::new(s, parts).unwrap()
        }
    }

    proptest! {
        #[test]
        fn join_union_edge_formula(sp in arb_spec()) {
            let g = build_join_union(&sp);
            prop_assert_eq!(g.order(), sp.order());
            prop_assert_eq!(g.size(), sp.edge_count());
        }

        #[test]
        fn join_union_min_degree(sp in arb_spec()) {
            prop_assume!(sp.parts().len() >= 2);
            let g = build_join_union(&sp);
            let smallest = *sp.parts().last().unwrap();
            prop_assert_eq!(g.min_degree(), sp.join_size() + smallest - 1);
        }

        #[test]
        fn odd_component_bound(n in 1usize..14, seed in any::<u64>(), pick in any::<u64>()) {
            let g = random_graph(n, 0.3, seed);
            let s = VertexSubset::new((0..n).filter(|v| (pick >> v) & 1 == 1).collect());
            let o = odd_components(&g, &s).unwrap();
            prop_assert!(o <= n - s.len());
            // parity: odd components have the same parity as the remaining order
            prop_assert_eq!(o % 2, (n - s.len()) % 2);
        }
    }
}
