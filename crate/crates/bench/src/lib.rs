//! Fixed-seed inputs shared by the benchmarks.

use minorkit::generate::{
    random_banded_permutation_graph, random_bipartite_permutation, random_cograph, random_interval_graph,
};
use minorkit::recognition::is_at_free;
use minorkit::Graph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn cograph(n: usize) -> Graph {
    random_cograph(n, &mut rng(n as u64)).0
}

pub fn bipartite_permutation(n: usize) -> Graph {
    random_bipartite_permutation(n / 2, n - n / 2, &mut rng(n as u64))
}

pub fn permutation(n: usize) -> Graph {
    random_banded_permutation_graph(n, 3, &mut rng(n as u64))
}

/// A connected AT-free interval graph on `n` vertices; retries seeds until one is connected.
pub fn connected_interval(n: usize) -> Graph {
    (0u64..)
        .map(|seed| random_interval_graph(n, 0.6, &mut rng(seed)))
        .find(|g| g.is_connected() && is_at_free(g).is_ok())
        .expect("some seed gives a connected graph")
}
