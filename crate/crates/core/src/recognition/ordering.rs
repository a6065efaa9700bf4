use fixedbitset::FixedBitSet;
use itertools::Itertools;
use pq_tree::PQTree;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Vertex count up to which a failed constructor is double-checked by trying every order.
pub const EXHAUSTIVE_ORDERING_LIMIT: usize = 9;

/// A bipartition together with an order of the second side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrongOrdering {
    /// `side[v]` is 0 for `V1` and 1 for `V2`.
    pub side: Vec<u8>,
    /// The vertices of `V2`, left to right.
    pub order: Vec<Vertex>,
}

impl StrongOrdering {
    pub fn v1(&self) -> Vec<Vertex> {
        (0..self.side.len()).filter(|&v| self.side[v] == 0).collect()
    }

    /// Position of every `V2` vertex in the order (`usize::MAX` for `V1`).
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![usize::MAX; self.side.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    /// The ordering restricted to `vertices`, relabelled as in [`Graph::induced_subgraph`].
    pub fn restrict(&self, vertices: &[Vertex]) -> StrongOrdering {
        let mut index = vec![usize::MAX; self.side.len()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        StrongOrdering {
            side: vertices.iter().map(|&v| self.side[v]).collect(),
            order: self
                .order
                .iter()
                .filter(|&&v| index[v] != usize::MAX)
                .map(|&v| index[v])
                .collect(),
        }
    }
}

/// Checks the adjacency and enclosure properties by definition.
pub fn verify_ordering(g: &Graph, ord: &StrongOrdering) -> Result<bool> {
    let n = g.n();
    if ord.side.len() != n || ord.side.iter().any(|&s| s > 1) {
        return Err(Error::domain("side labels must be 0 or 1 for every vertex"));
    }
    if g.edges().iter().any(|&(a, b)| ord.side[a] == ord.side[b]) {
        return Err(Error::domain("an edge lies inside one side of the bipartition"));
    }
    let mut listed = ord.order.clone();
    listed.sort_unstable();
    let v2: Vec<Vertex> = (0..n).filter(|&v| ord.side[v] == 1).collect();
    if listed != v2 {
        return Err(Error::domain("the order must list every V2 vertex exactly once"));
    }
    let pos = ord.positions();
    let v1 = ord.v1();
    for &u in &v1 {
        if !contiguous(g.neighbors(u).map(|w| pos[w])) {
            return Ok(false);
        }
    }
    for &a in &v1 {
        for &b in &v1 {
            if a == b || !g.neighborhood(a).is_subset(g.neighborhood(b)) {
                continue;
            }
            let diff = g.neighborhood(b).difference(g.neighborhood(a)).map(|w| pos[w]);
            if !contiguous(diff) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn contiguous(positions: impl Iterator<Item = usize>) -> bool {
    let mut count = 0;
    let (mut lo, mut hi) = (usize::MAX, 0);
    for p in positions {
        count += 1;
        lo = lo.min(p);
        hi = hi.max(p);
    }
    count == 0 || hi - lo + 1 == count
}

/// An ordering with the adjacency and enclosure properties, or `None` if `g` is not a bipartite
/// permutation graph.
///
/// Each component is arranged by consecutive-ones testing over its neighbourhood and enclosure
/// constraints; components are concatenated by smallest vertex, with isolated `V2` vertices last.
pub fn strong_ordering(g: &Graph) -> Option<StrongOrdering> {
    let side = g.bipartition()?;
    let mut order = Vec::new();
    let mut isolated = Vec::new();
    for comp in g.components() {
        if comp.len() == 1 {
            if side[comp[0]] == 1 {
                isolated.push(comp[0]);
            }
            continue;
        }
        order.extend(component_order(g, &side, &comp)?);
    }
    order.extend(isolated);
    let ord = StrongOrdering { side, order };
    if verify_ordering(g, &ord).unwrap_or(false) {
        return Some(ord);
    }
    // Unreachable when the arrangement is correct; the exhaustive pass keeps small cases honest.
    if g.n() <= EXHAUSTIVE_ORDERING_LIMIT {
        return exhaustive_ordering(g);
    }
    None
}

fn component_order(g: &Graph, side: &[u8], comp: &[Vertex]) -> Option<Vec<Vertex>> {
    let v2: Vec<Vertex> = comp.iter().copied().filter(|&v| side[v] == 1).collect();
    let v1: Vec<Vertex> = comp.iter().copied().filter(|&v| side[v] == 0).collect();
    if v2.len() <= 2 {
        return Some(v2);
    }
    let mut constraints: Vec<Vec<Vertex>> = Vec::new();
    let mut push = |set: &FixedBitSet| {
        let s: Vec<Vertex> = set.ones().collect();
        if s.len() >= 2 && s.len() < v2.len() {
            constraints.push(s);
        }
    };
    for &a in &v1 {
        push(g.neighborhood(a));
        for &b in &v1 {
            if a != b && g.neighborhood(a).is_subset(g.neighborhood(b)) {
                let mut diff = g.neighborhood(b).clone();
                diff.difference_with(g.neighborhood(a));
                push(&diff);
            }
        }
    }
    constraints.sort();
    constraints.dedup();
    let mut tree = PQTree::from_leaves(&v2).ok()?;
    for c in &constraints {
        tree = tree.reduction(c).ok()?;
    }
    tree.sort_lexicographically();
    Some(tree.frontier())
}

/// Tries every order of `V2`; meant for cross-checking on small graphs.
pub fn exhaustive_ordering(g: &Graph) -> Option<StrongOrdering> {
    let side = g.bipartition()?;
    let v2: Vec<Vertex> = (0..g.n()).filter(|&v| side[v] == 1).collect();
    let k = v2.len();
    v2.into_iter().permutations(k).find_map(|order| {
        let ord = StrongOrdering {
            side: side.clone(),
            order,
        };
        verify_ordering(g, &ord).unwrap_or(false).then_some(ord)
    })
}

pub fn is_bipartite_permutation(g: &Graph) -> bool {
    strong_ordering(g).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_any_order() {
        let g = Graph::complete_bipartite(1, 2);
        let ord = strong_ordering(&g).unwrap();
        assert_eq!(ord.order.len(), 2);
        assert!(verify_ordering(&g, &ord).unwrap());
    }

    #[test]
    fn p5_follows_the_path() {
        let g = Graph::path(5);
        let ord = strong_ordering(&g).unwrap();
        assert!(ord.order == vec![1, 3]);
        let k22 = Graph::complete_bipartite(2, 2);
        for order in [vec![2, 3], vec![3, 2]] {
            let ord = StrongOrdering {
                side: vec![0, 0, 1, 1],
                order,
            };
            assert!(verify_ordering(&k22, &ord).unwrap());
        }
    }

    #[test]
    fn c6_is_rejected() {
        assert!(strong_ordering(&Graph::cycle(6)).is_none());
        assert!(exhaustive_ordering(&Graph::cycle(6)).is_none());
    }

    #[test]
    fn p4_with_swapped_middle_fails() {
        // P4 has only two V2 vertices, so any order passes; P6 is the smallest path where
        // swapping against the path order breaks a neighbourhood.
        let g = Graph::path(6);
        let bad = StrongOrdering {
            side: vec![0, 1, 0, 1, 0, 1],
            order: vec![3, 1, 5],
        };
        assert!(!verify_ordering(&g, &bad).unwrap());
        let good = StrongOrdering {
            order: vec![1, 3, 5],
            ..bad
        };
        assert!(verify_ordering(&g, &good).unwrap());
    }

    #[test]
    fn empty_side_and_bad_bipartition() {
        let g = Graph::new(3);
        let ord = StrongOrdering {
            side: vec![0, 0, 1],
            order: vec![2],
        };
        assert!(verify_ordering(&g, &ord).unwrap());
        let bad = StrongOrdering {
            side: vec![0, 0],
            order: vec![],
        };
        assert!(verify_ordering(&Graph::path(2), &bad).is_err());
    }

    #[test]
    fn enclosure_matters() {
        // N(0) = {3,4,5} contains N(1) = {4}, so 4 must sit at an end.
        let g = Graph::from_edges(6, [(0, 3), (0, 4), (0, 5), (1, 4), (2, 5)]).unwrap();
        let ord = StrongOrdering {
            side: vec![0, 0, 0, 1, 1, 1],
            order: vec![3, 4, 5],
        };
        assert!(!verify_ordering(&g, &ord).unwrap());
        let found = strong_ordering(&g).unwrap();
        assert!(verify_ordering(&g, &found).unwrap());
    }
}
