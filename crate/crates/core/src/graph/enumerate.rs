use super::Graph;
use crate::error::{Error, Result};

/// Largest order for exhaustive labeled enumeration (2^21 masks at n = 7).
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// Every labeled simple graph on `n` vertices accepted by `filter`, in
/// increasing order of the adjacency bitmask. Bit `k` of the mask is the `k`-th
/// vertex pair in graph6 order `(0,1), (0,2), (1,2), (0,3), …`.
pub fn enumerate_labeled_graphs<F>(n: usize, filter: F) -> Result<LabeledGraphs<F>>
where
    F: FnMut(&Graph) -> bool,
{
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::UnsupportedSize {
            what: "labeled enumeration (use graph6 input for larger orders)",
            size: n,
            max: MAX_ENUMERATION_ORDER,
        });
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    Ok(LabeledGraphs {
        n,
        end: 1u64 << pairs.len(),
        pairs,
        next: 0,
        filter,
    })
}

pub struct LabeledGraphs<F> {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
    filter: F,
}

impl<F: FnMut(&Graph) -> bool> Iterator for LabeledGraphs<F> {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            let mut g = Graph::empty(self.n);
            for (k, &(u, v)) in self.pairs.iter().enumerate() {
                if (mask >> k) & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
            if (self.filter)(&g) {
                return Some(g);
            }
        }
        None
    }
}
