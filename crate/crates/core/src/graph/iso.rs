use super::Graph;
use crate::error::{Error, Result};

pub const MAX_ISOMORPHISM_ORDER: usize = 10;

/// Backtracking isomorphism test for graphs of order at most 10.
///
/// Vertices of `g` are mapped in order of decreasing degree, and each may
/// only go to an unused vertex of `h` with the same degree whose adjacencies
/// to already-mapped vertices agree.
pub fn is_isomorphic_small(g: &Graph, h: &Graph) -> Result<bool> {
    if g.order() != h.order() {
        return Ok(false);
    }
    let n = g.order();
    if n > MAX_ISOMORPHISM_ORDER {
        return Err(Error::UnsupportedSize {
            what: "isomorphism test",
            size: n,
            max: MAX_ISOMORPHISM_ORDER,
        });
    }
    if g.size() != h.size() {
        return Ok(false);
    }
    let dg = g.degrees();
    let dh = h.degrees();
    let mut sg = dg.clone();
    let mut sh = dh.clone();
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return Ok(false);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(dg[v]));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend(g, h, &dg, &dh, &order, 0, &mut map, &mut used))
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    dg: &[usize],
    dh: &[usize],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in 0..h.order() {
        if used[w] || dh[w] != dg[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(g, h, dg, dh, order, depth + 1, map, used) {
            return true;
        }
        used[w] = false;
    }
    map[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_join_union, random_graph, JoinUnionSpec};

    #[test]
    fn cycles_and_paths() {
        let c4 = Graph::cycle(4);
        let relabeled = c4.relabel(&[2, 0, 3, 1]);
        assert!(is_isomorphic_small(&c4, &relabeled).unwrap());
        assert!(!is_isomorphic_small(&c4, &Graph::path(4)).unwrap());
        assert!(!is_isomorphic_small(&c4, &Graph::cycle(5)).unwrap());
    }

    #[test]
    fn same_degree_sequence_not_isomorphic() {
        // C6 versus two disjoint triangles
        let two_triangles = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!is_isomorphic_small(&Graph::cycle(6), &two_triangles).unwrap());
    }

    #[test]
    fn join_union_against_itself() {
        let spec = JoinUnionSpec::new(2, vec![3, 1]).unwrap();
        let a = build_join_union(&spec);
        let b = a.relabel(&[5, 3, 1, 0, 2, 4]);
        assert!(is_isomorphic_small(&a, &b).unwrap());
    }

    #[test]
    fn random_relabelings() {
        for seed in 0..50 {
            let g = random_graph(9, 0.45, seed);
            let perm: Vec<usize> = (0..9).map(|i| (i * 4 + seed as usize) % 9).collect();
            assert!(is_isomorphic_small(&g, &g.relabel(&perm)).unwrap());
        }
    }

    #[test]
    fn size_limit() {
        assert!(is_isomorphic_small(&Graph::empty(11), &Graph::empty(11)).is_err());
        assert!(!is_isomorphic_small(&Graph::empty(11), &Graph::empty(12)).unwrap());
    }
}
