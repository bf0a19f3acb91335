//! Seeded Erdős–Rényi sampling.
//!
//! The generator is ChaCha8 (`rand_chacha::ChaCha8Rng::seed_from_u64`), whose
//! output stream is fixed across platforms. Pairs are visited in lexicographic
//! order `(0,1), (0,2), …, (n−2,n−1)` and each draws one `f64` in `[0, 1)`;
//! the edge is present iff the draw is below `edge_prob`.

use super::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn random_graph(n: usize, edge_prob: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample(n, edge_prob, &mut rng)
}

fn sample(n: usize, edge_prob: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < edge_prob {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Rejection-samples until `accept` holds, drawing successive graphs from
/// one stream seeded by `seed`. Returns `None` after `max_tries` rejections.
pub fn random_connected_graph(
    n: usize,
    edge_prob: f64,
    seed: u64,
    max_tries: usize,
    mut accept: impl FnMut(&Graph) -> bool,
) -> Option<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..max_tries)
        .map(|_| sample(n, edge_prob, &mut rng))
        .find(|g| g.is_connected() && accept(g))
}
