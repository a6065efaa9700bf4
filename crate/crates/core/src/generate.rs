//! Graph families and enumerators used by tests and benchmarks.

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Graph, Vertex};
use crate::recognition::Cotree;

/// Random cotree on leaves `0..n` and its graph; the root type is chosen at random.
pub fn random_cograph<R: Rng + ?Sized>(n: usize, rng: &mut R) -> (Graph, Cotree) {
    let mut leaves: Vec<Vertex> = (0..n).collect();
    leaves.shuffle(rng);
    let join = rng.gen_bool(0.5);
    let t = random_cotree(&leaves, join, rng);
    (t.to_graph(n), t)
}

fn random_cotree<R: Rng + ?Sized>(leaves: &[Vertex], join: bool, rng: &mut R) -> Cotree {
    if leaves.len() == 1 {
        return Cotree::Leaf(leaves[0]);
    }
    let parts = rng.gen_range(2..=leaves.len().min(4));
    let mut cuts: Vec<usize> = (1..leaves.len()).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts.into_iter().take(parts - 1).collect();
    cuts.sort_unstable();
    let mut children = Vec::new();
    let mut lo = 0;
    for hi in cuts.into_iter().chain(std::iter::once(leaves.len())) {
        children.push(random_cotree(&leaves[lo..hi], !join, rng));
        lo = hi;
    }
    if join {
        Cotree::Join(children)
    } else {
        Cotree::Union(children)
    }
}

/// Every labelled graph on `n` vertices (`n <= 7`), by edge bitmask over the sorted pairs.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 7, "2^(n choose 2) graphs is too many");
    let pairs: Vec<(Vertex, Vertex)> = (0..n).tuple_combinations().collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let mut g = Graph::new(n);
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.add_edge(a, b);
            }
        }
        g
    })
}

/// One representative per isomorphism class of graphs on `n` vertices (`n <= 8`), built by
/// adding a vertex to each class on `n - 1` vertices in every possible way.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 8, "canonical forms are computed by permutation search");
    let mut level = vec![Graph::new(0)];
    for k in 1..=n {
        let mut seen = std::collections::BTreeMap::new();
        for g in &level {
            for mask in 0u32..1 << (k - 1) {
                let mut h = Graph::new(k);
                for (a, b) in g.edges() {
                    h.add_edge(a, b);
                }
                for v in 0..k - 1 {
                    if mask >> v & 1 == 1 {
                        h.add_edge(v, k - 1);
                    }
                }
                seen.entry(canonical_code(&h)).or_insert(h);
            }
        }
        level = seen.into_values().collect();
    }
    level
}

/// Largest adjacency code over vertex orders that list degrees non-increasingly.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 11, "adjacency code must fit in 64 bits");
    let mut by_degree: Vec<Vertex> = (0..n).collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let groups: Vec<Vec<Vertex>> = by_degree
        .into_iter()
        .chunk_by(|&v| g.degree(v))
        .into_iter()
        .map(|(_, grp)| grp.collect())
        .collect();
    let masks = g.masks();
    let mut best = 0u64;
    let orders = groups
        .iter()
        .map(|grp| grp.iter().copied().permutations(grp.len()).collect::<Vec<_>>())
        .multi_cartesian_product();
    let mut any = false;
    for parts in orders {
        any = true;
        let order: Vec<Vertex> = parts.concat();
        best = best.max(code_for(&masks, &order));
    }
    if !any {
        best = code_for(&masks, &[]);
    }
    best
}

fn code_for(masks: &[u64], order: &[Vertex]) -> u64 {
    let mut code = 0u64;
    for (i, &a) in order.iter().enumerate() {
        for &b in &order[i + 1..] {
            code = code << 1 | (masks[a] >> b & 1);
        }
    }
    code
}

/// Every bipartite graph with sides `0..a` and `a..a+b` (`a * b <= 20`).
pub fn bipartite_graphs(a: usize, b: usize) -> impl Iterator<Item = Graph> {
    assert!(a * b <= 20, "too many edge subsets");
    (0u32..1 << (a * b)).map(move |mask| {
        let mut g = Graph::new(a + b);
        for i in 0..a {
            for j in 0..b {
                if mask >> (i * b + j) & 1 == 1 {
                    g.add_edge(i, a + j);
                }
            }
        }
        g
    })
}

/// Permutation graph of `perm`: `i < j` adjacent iff `perm[i] > perm[j]`.
pub fn permutation_graph(perm: &[usize]) -> Graph {
    let n = perm.len();
    let mut g = Graph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if perm[i] > perm[j] {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Random bipartite graph whose first side are intervals over the second side with both
/// endpoints non-decreasing, which is a bipartite permutation graph.
pub fn random_bipartite_permutation<R: Rng + ?Sized>(n1: usize, n2: usize, rng: &mut R) -> Graph {
    let mut g = Graph::new(n1 + n2);
    if n2 == 0 {
        return g;
    }
    let mut lo = 0;
    let mut hi = 0;
    for u in 0..n1 {
        lo = (lo + rng.gen_range(0..=1)).min(n2 - 1);
        hi = hi.max(lo);
        hi = (hi + rng.gen_range(0..=2)).min(n2 - 1);
        hi = hi.max(lo);
        let a = if rng.gen_bool(0.1) { n2 } else { lo };
        for p in a..=hi.min(n2 - 1) {
            if a < n2 {
                g.add_edge(u, n1 + p);
            }
        }
    }
    relabel(&g, rng)
}

/// Random permutation graph that is "banded": each element moves at most `spread` places.
pub fn random_banded_permutation_graph<R: Rng + ?Sized>(n: usize, spread: usize, rng: &mut R) -> Graph {
    let mut keys: Vec<(f64, usize)> = (0..n)
        .map(|i| (i as f64 + rng.gen_range(0.0..=spread as f64), i))
        .collect();
    keys.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut perm = vec![0; n];
    for (rank, &(_, i)) in keys.iter().enumerate() {
        perm[i] = rank;
    }
    permutation_graph(&perm)
}

/// Random interval graph: `n` intervals with left ends spread over `[0, n * stretch)`.
pub fn random_interval_graph<R: Rng + ?Sized>(n: usize, stretch: f64, rng: &mut R) -> Graph {
    let iv: Vec<(f64, f64)> = (0..n)
        .map(|_| {
            let a = rng.gen_range(0.0..n as f64 * stretch);
            (a, a + rng.gen_range(0.5..2.5))
        })
        .collect();
    let mut g = Graph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if iv[i].0 <= iv[j].1 && iv[j].0 <= iv[i].1 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Random chordal graph: each new vertex is joined to a clique inside the closed neighbourhood
/// of a random earlier vertex, so the reverse insertion order is a perfect elimination order.
pub fn random_chordal<R: Rng + ?Sized>(n: usize, density: f64, rng: &mut R) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        let w = rng.gen_range(0..v);
        let mut pool: Vec<Vertex> = g.neighbors(w).filter(|&x| x < v).collect();
        pool.shuffle(rng);
        let mut clique = vec![w];
        for x in pool {
            if rng.gen_bool(density) && clique.iter().all(|&c| g.has_edge(c, x)) {
                clique.push(x);
            }
        }
        for c in clique {
            g.add_edge(c, v);
        }
    }
    relabel(&g, rng)
}

/// Erdős–Rényi graph.
pub fn random_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::new(n);
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(a, b);
            }
        }
    }
    g
}

/// The same graph under a uniformly random relabelling.
pub fn relabel<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Graph {
    let mut perm: Vec<Vertex> = (0..g.n()).collect();
    perm.shuffle(rng);
    let mut h = Graph::new(g.n());
    for (a, b) in g.edges() {
        h.add_edge(perm[a], perm[b]);
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_chordal;
    use crate::recognition::{is_bipartite_permutation, is_cograph, verify_cotree};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| nonisomorphic_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
        assert_eq!(all_graphs(4).count(), 64);
        assert_eq!(bipartite_graphs(2, 3).count(), 64);
    }

    #[test]
    fn canonical_code_is_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let g = random_gnp(7, 0.4, &mut rng);
            assert_eq!(canonical_code(&g), canonical_code(&relabel(&g, &mut rng)));
        }
    }

    #[test]
    fn generators_stay_in_class() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let (g, t) = random_cograph(rng.gen_range(1..9), &mut rng);
            assert!(is_cograph(&g) && verify_cotree(&g, &t));
            let g = random_bipartite_permutation(rng.gen_range(1..5), rng.gen_range(1..5), &mut rng);
            assert!(is_bipartite_permutation(&g), "{g:?}");
            assert!(is_chordal(&random_chordal(10, 0.6, &mut rng)));
        }
    }
}
