//! The odd-component condition `o(G − S) < |S|` for all `|S| ≥ 2`, which on
//! an even number of vertices guarantees an even factor.

use super::{Existence, FactorMethod, FactorVerdict};
use crate::graph::{Graph, VertexSubset};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum YanKano {
    Holds,
    /// The lexicographically first `S` (as a sorted vertex list) with
    /// `o(G − S) ≥ |S|`.
    Violated(VertexSubset),
    /// More than `subset_budget` vertices.
    Unknown,
}

/// Tests every `S` with `2 ≤ |S| ≤ n` when `n ≤ subset_budget`.
pub fn yan_kano_check(g: &Graph, subset_budget: usize) -> YanKano {
    let n = g.order();
    if n > subset_budget || n > 64 {
        return YanKano::Unknown;
    }
    let adj: Vec<u64> = (0..n).map(|v| g.neighbor_mask(v)).collect();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut members = Vec::with_capacity(n);
    match first_violation(&adj, full, 0, 0, &mut members) {
        Some(s) => YanKano::Violated(VertexSubset::new(s)),
        None => YanKano::Holds,
    }
}

/// Depth-first over sorted vertex lists, which visits them in
/// lexicographic order.
fn first_violation(adj: &[u64], full: u64, start: usize, mask: u64, members: &mut Vec<usize>) -> Option<Vec<usize>> {
    for v in start..adj.len() {
        members.push(v);
        let m = mask | (1 << v);
        if members.len() >= 2 && odd_components_mask(adj, full & !m) >= members.len() {
            return Some(members.clone());
        }
        if let Some(s) = first_violation(adj, full, v + 1, m, members) {
            return Some(s);
        }
        members.pop();
    }
    None
}

fn odd_components_mask(adj: &[u64], mut remaining: u64) -> usize {
    let mut odd = 0;
    while remaining != 0 {
        let mut comp = remaining & remaining.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & remaining & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        remaining &= !comp;
        odd += (comp.count_ones() % 2) as usize;
    }
    odd
}

/// "Yes" when the condition holds on an even number `n ≥ 4` of vertices.
/// (`K_2` satisfies the condition vacuously yet has no even factor.)
pub(crate) fn implied_verdict(g: &Graph, subset_budget: usize) -> Option<FactorVerdict> {
    let n = g.order();
    if n < 4 || n % 2 == 1 {
        return None;
    }
    (yan_kano_check(g, subset_budget) == YanKano::Holds).then_some(FactorVerdict {
        exists: Existence::Yes,
        witness: None,
        method: FactorMethod::YanKanoImplied,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::tests::gstar_8_2;
    use crate::graph::{odd_components, random_graph};
    use proptest::prelude::*;

    #[test]
    fn examples() {
        assert_eq!(yan_kano_check(&Graph::complete(6), 20), YanKano::Holds);
        assert_eq!(
            yan_kano_check(&gstar_8_2(), 20),
            YanKano::Violated(VertexSubset::new(vec![0, 1]))
        );
        // sufficient, not necessary: C6 has an even factor yet {0,2} leaves
        // odd components {1} and {3,4,5}
        assert_eq!(
            yan_kano_check(&Graph::cycle(6), 20),
            YanKano::Violated(VertexSubset::new(vec![0, 2]))
        );
        assert_eq!(yan_kano_check(&Graph::complete(21), 20), YanKano::Unknown);
    }

    #[test]
    fn cycle_antipodal_pair_has_no_odd_components() {
        let s = VertexSubset::new(vec![0, 3]);
        assert_eq!(odd_components(&Graph::cycle(6), &s).unwrap(), 0);
    }

    #[test]
    fn lexicographic_first() {
        // star K_{1,5}: {0,1} leaves four odd singletons
        assert_eq!(
            yan_kano_check(&Graph::star(5), 20),
            YanKano::Violated(VertexSubset::new(vec![0, 1]))
        );
        // path 0-1-2-3: {0,1} leaves one component {2,3} (even); {0,1,2}
        // leaves {3}: 1 < 3; {0,2} leaves {1},{3}: 2 ≥ 2
        assert_eq!(
            yan_kano_check(&Graph::path(4), 20),
            YanKano::Violated(VertexSubset::new(vec![0, 2]))
        );
    }

    #[test]
    fn k2_holds_vacuously_but_implies_nothing() {
        assert_eq!(yan_kano_check(&Graph::complete(2), 20), YanKano::Holds);
        assert!(implied_verdict(&Graph::complete(2), 20).is_none());
    }

    proptest! {
        #[test]
        fn mask_count_matches_graph_count(n in 1usize..12, seed in any::<u64>(), pick in any::<u64>()) {
            let g = random_graph(n, 0.35, seed);
            let adj: Vec<u64> = (0..n).map(|v| g.neighbor_mask(v)).collect();
            let s: Vec<usize> = (0..n).filter(|v| (pick >> v) & 1 == 1).collect();
            let full = (1u64 << n) - 1;
            let smask = s.iter().fold(0u64, |m, &v| m | 1 << v);
            prop_assert_eq!(
                odd_components_mask(&adj, full & !smask),
                odd_components(&g, &VertexSubset::new(s)).unwrap()
            );
        }
    }
}
