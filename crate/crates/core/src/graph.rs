//! Simple undirected graphs on vertices `0..n`, stored as one adjacency bit row per vertex.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// An unordered vertex pair; normalized edges always have `.0 < .1`.
pub type Edge = (Vertex, Vertex);

/// Default vertex limit for the exponential longest-induced-cycle search.
pub const DEFAULT_CHORDALITY_CAP: usize = 16;

pub(crate) fn norm(e: Edge) -> Edge {
    if e.0 <= e.1 {
        e
    } else {
        (e.1, e.0)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::domain(format!("edge ({u}, {v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::domain(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Path on `n` vertices, `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0);
        g
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    /// Adds `uv`; adding an existing edge is a no-op.
    ///
    /// Panics on self-loops or out-of-range endpoints.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) {
        assert!(u != v, "self-loop at vertex {u}");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) {
        self.adj[u].set(v, false);
        self.adj[v].set(u, false);
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && v < self.n() && self.adj[u].contains(v)
    }

    pub fn neighborhood(&self, v: Vertex) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].ones()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].count_ones(..)
    }

    /// Closed neighborhood `N[v]`.
    pub fn closed_neighborhood(&self, v: Vertex) -> FixedBitSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n() {
            out.extend(self.adj[u].ones().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Adjacency rows as 64-bit masks; only valid for `n <= 64`.
    pub fn masks(&self) -> Vec<u64> {
        assert!(self.n() <= 64, "mask view needs n <= 64");
        self.adj
            .iter()
            .map(|row| row.ones().fold(0u64, |acc, v| acc | (1 << v)))
            .collect()
    }

    pub fn from_masks(masks: &[u64]) -> Self {
        let n = masks.len();
        let mut g = Graph::new(n);
        for (u, &row) in masks.iter().enumerate() {
            for v in ones64(row) {
                if v > u && v < n {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn complement(&self) -> Self {
        let n = self.n();
        let mut g = Graph::new(n);
        for u in 0..n {
            let mut row = self.adj[u].clone();
            row.toggle_range(..);
            row.set(u, false);
            g.adj[u] = row;
        }
        g
    }

    /// `g1 ⊕ g2`: g1 keeps its labels, g2's labels shift up by `g1.n()`.
    pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Self {
        let n1 = g1.n();
        let mut g = Graph::new(n1 + g2.n());
        for (u, v) in g1.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in g2.edges() {
            g.add_edge(u + n1, v + n1);
        }
        g
    }

    /// `g1 ⊗ g2`: disjoint union plus every edge between the two sides.
    pub fn join(g1: &Graph, g2: &Graph) -> Self {
        let n1 = g1.n();
        let mut g = Graph::disjoint_union(g1, g2);
        for u in 0..n1 {
            for v in n1..g.n() {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Result<Self> {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n() {
                return Err(Error::domain(format!(
                    "vertex {v} not in graph of order {}",
                    self.n()
                )));
            }
            if index[v] != usize::MAX {
                return Err(Error::domain(format!("vertex {v} listed twice")));
            }
            index[v] = i;
        }
        let mut g = Graph::new(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for w in self.adj[v].ones() {
                let j = index[w];
                if j != usize::MAX && j > i {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Quotient by a vertex partition given as a block label per vertex (labels `0..blocks`).
    ///
    /// Blocks become vertices; two blocks are adjacent iff some edge joins them.
    pub fn quotient(&self, block_of: &[usize], blocks: usize) -> Self {
        debug_assert_eq!(block_of.len(), self.n());
        let mut q = Graph::new(blocks);
        for (u, v) in self.edges() {
            let (a, b) = (block_of[u], block_of[v]);
            if a != b {
                q.add_edge(a, b);
            }
        }
        q
    }

    /// Contracts the edge `e`. The merged vertex takes the smaller endpoint's label and labels
    /// above the larger endpoint shift down by one.
    pub fn contract_edge(&self, e: Edge) -> Result<Self> {
        let (a, b) = norm(e);
        if !self.has_edge(a, b) {
            return Err(Error::domain(format!("({a}, {b}) is not an edge")));
        }
        let block_of: Vec<usize> = (0..self.n())
            .map(|v| match v.cmp(&b) {
                std::cmp::Ordering::Less => v,
                std::cmp::Ordering::Equal => a,
                std::cmp::Ordering::Greater => v - 1,
            })
            .collect();
        Ok(self.quotient(&block_of, self.n() - 1))
    }

    /// `G/S`: quotient by the components of the spanning subgraph `(V, S)`.
    ///
    /// Each component is labelled by the rank of its smallest vertex, which agrees with
    /// [`Graph::contract_edge`] for a single edge.
    pub fn contract_edges(&self, edges: &[Edge]) -> Result<Self> {
        let (block_of, blocks) = self.contraction_classes(edges)?;
        Ok(self.quotient(&block_of, blocks))
    }

    /// Block labels of the partition that `G/S` collapses, plus the block count.
    pub fn contraction_classes(&self, edges: &[Edge]) -> Result<(Vec<usize>, usize)> {
        let n = self.n();
        let mut dsu = Dsu::new(n);
        for &(u, v) in edges {
            if !self.has_edge(u, v) {
                return Err(Error::domain(format!("({u}, {v}) is not an edge")));
            }
            dsu.union(u, v);
        }
        let mut label = vec![usize::MAX; n];
        let mut blocks = 0;
        let block_of = (0..n)
            .map(|v| {
                let r = dsu.find(v);
                if label[r] == usize::MAX {
                    label[r] = blocks;
                    blocks += 1;
                }
                label[r]
            })
            .collect();
        Ok((block_of, blocks))
    }

    /// Breadth-first hop counts from `source`; `None` marks unreachable vertices.
    pub fn distances(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap();
            for y in self.adj[x].ones() {
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn distance_matrix(&self) -> DistanceMatrix {
        let n = self.n();
        let mut d = vec![INF; n * n];
        for s in 0..n {
            for (t, dt) in self.distances(s).into_iter().enumerate() {
                if let Some(x) = dt {
                    d[s * n + t] = x as u32;
                }
            }
        }
        DistanceMatrix { n, d }
    }

    /// Largest distance between two vertices; `None` means infinite (disconnected, `n >= 2`).
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for s in 0..self.n() {
            for d in self.distances(s) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let x = comp[i];
                i += 1;
                for y in self.adj[x].ones() {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Two-colouring with colour 0 on the smallest vertex of every component, or `None`.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let n = self.n();
        let mut color = vec![u8::MAX; n];
        for s in 0..n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for y in self.adj[x].ones() {
                    if color[y] == u8::MAX {
                        color[y] = 1 - color[x];
                        queue.push_back(y);
                    } else if color[y] == color[x] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.m() == n * n.saturating_sub(1) / 2
    }

    /// A maximum clique, lexicographically first among those found by branch and bound.
    pub fn max_clique(&self) -> Vec<Vertex> {
        let mut best = Vec::new();
        let mut current = Vec::new();
        let all: Vec<Vertex> = (0..self.n()).collect();
        clique_search(self, &mut current, all, &mut best);
        best
    }

    pub fn clique_number(&self) -> usize {
        self.max_clique().len()
    }
}

fn clique_search(g: &Graph, current: &mut Vec<Vertex>, candidates: Vec<Vertex>, best: &mut Vec<Vertex>) {
    if current.len() > best.len() {
        *best = current.clone();
    }
    for (i, &v) in candidates.iter().enumerate() {
        if current.len() + candidates.len() - i <= best.len() {
            return;
        }
        let next: Vec<Vertex> = candidates[i + 1..]
            .iter()
            .copied()
            .filter(|&w| g.has_edge(v, w))
            .collect();
        current.push(v);
        clique_search(g, current, next, best);
        current.pop();
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

pub(crate) const INF: u32 = u32::MAX;

/// All-pairs hop counts; `INF` marks unreachable pairs.
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let x = self.d[u * self.n + v];
        (x != INF).then_some(x as usize)
    }

    /// Finite distance; panics on unreachable pairs.
    pub fn at(&self, u: Vertex, v: Vertex) -> usize {
        self.get(u, v).expect("vertices are disconnected")
    }

    pub fn diameter(&self) -> Option<usize> {
        if self.d.contains(&INF) {
            return None;
        }
        Some(self.d.iter().copied().max().unwrap_or(0) as usize)
    }
}

/// A validated set of edges of some carrier graph, kept sorted and deduplicated.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeSet(Vec<Edge>);

impl EdgeSet {
    pub fn new(g: &Graph, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut out: Vec<Edge> = Vec::new();
        for e in edges {
            let e = norm(e);
            if !g.has_edge(e.0, e.1) {
                return Err(Error::domain(format!("({}, {}) is not an edge", e.0, e.1)));
            }
            out.push(e);
        }
        out.sort_unstable();
        out.dedup();
        Ok(EdgeSet(out))
    }

    pub fn edges(&self) -> &[Edge] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

pub(crate) fn ones64(mut x: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if x == 0 {
            None
        } else {
            let i = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(i)
        }
    })
}

/// Diameter of a graph given as adjacency masks over `0..adj.len()`; `None` if disconnected.
pub(crate) fn mask_diameter(adj: &[u64]) -> Option<usize> {
    let n = adj.len();
    if n == 0 {
        return Some(0);
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0;
    for s in 0..n {
        let mut seen = 1u64 << s;
        let mut frontier = seen;
        let mut depth = 0;
        while seen != all {
            let mut next = 0;
            for v in ones64(frontier) {
                next |= adj[v];
            }
            next &= !seen;
            if next == 0 {
                return None;
            }
            seen |= next;
            frontier = next;
            depth += 1;
        }
        best = best.max(depth);
    }
    Some(best)
}

/// Length of a longest induced cycle (0 for forests).
pub fn chordality(g: &Graph) -> Result<usize> {
    chordality_capped(g, DEFAULT_CHORDALITY_CAP)
}

pub fn chordality_capped(g: &Graph, cap: usize) -> Result<usize> {
    let n = g.n();
    if n > cap {
        return Err(Error::capacity("vertex count for chordality", n, cap));
    }
    let mut best = 0;
    let mut path = Vec::with_capacity(n);
    for s in 0..n {
        path.clear();
        path.push(s);
        extend_induced_path(g, s, &mut path, &mut best);
    }
    Ok(best)
}

/// Grows induced paths that start at `start` and use only larger vertices; a path closes into
/// an induced cycle when its new end sees `start` and nothing else on the path but its predecessor.
fn extend_induced_path(g: &Graph, start: Vertex, path: &mut Vec<Vertex>, best: &mut usize) {
    let last = *path.last().unwrap();
    for w in g.neighbors(last) {
        if w <= start || path.contains(&w) {
            continue;
        }
        let inner = if path.len() >= 2 {
            &path[1..path.len() - 1]
        } else {
            &[][..]
        };
        if inner.iter().any(|&p| g.has_edge(p, w)) {
            continue;
        }
        if path.len() >= 2 && g.has_edge(start, w) {
            *best = (*best).max(path.len() + 1);
            continue;
        }
        path.push(w);
        extend_induced_path(g, start, path, best);
        path.pop();
    }
}

/// Chordal test by maximum cardinality search followed by a perfect-elimination check.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    // order[i] is the i-th vertex picked; the reverse is a perfect elimination ordering when chordal.
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !numbered[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        numbered[v] = true;
        order.push(v);
        for w in g.neighbors(v) {
            if !numbered[w] {
                weight[w] += 1;
            }
        }
    }
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    // For each v, its earlier-numbered neighbours must form a clique; it suffices to check that
    // they are all adjacent to the latest of them.
    for &v in &order {
        let earlier: Vec<Vertex> = g.neighbors(v).filter(|&w| position[w] < position[v]).collect();
        if let Some(&parent) = earlier.iter().max_by_key(|&&w| position[w]) {
            if earlier.iter().any(|&w| w != parent && !g.has_edge(w, parent)) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contract_triangle_edge_gives_k2() {
        let g = Graph::complete(3).contract_edge((0, 2)).unwrap();
        assert_eq!(g, Graph::complete(2));
    }

    #[test]
    fn contract_path_middle_edge() {
        let g = Graph::path(4).contract_edge((1, 2)).unwrap();
        assert_eq!(g, Graph::path(3));
    }

    #[test]
    fn contract_c4_edge_gives_triangle() {
        // C4 = 0-1-2-3-0; merging 0,1 leaves {01} adjacent to 2 (via 1) and 3 (via 0), and 2-3.
        let g = Graph::cycle(4).contract_edge((0, 1)).unwrap();
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn contract_edge_relabels_above_larger_endpoint() {
        // Star centre 1 with leaves 0, 2, 3 plus edge 2-3; contract (1, 3).
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (1, 3), (2, 3)]).unwrap();
        let h = g.contract_edge((3, 1)).unwrap();
        assert_eq!(h, Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap());
    }

    #[test]
    fn contract_non_edge_is_domain_error() {
        assert!(matches!(
            Graph::path(3).contract_edge((0, 2)),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            Graph::path(3).contract_edges(&[(0, 2)]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn contract_edges_examples() {
        let p5 = Graph::path(5);
        assert_eq!(p5.contract_edges(&[(0, 1), (3, 4)]).unwrap(), Graph::path(3));
        assert_eq!(p5.contract_edges(&[]).unwrap(), p5);
        // C6 with two opposite edges contracted: four classes {0,1},{2},{3,4},{5} in a cycle.
        let c6 = Graph::cycle(6).contract_edges(&[(0, 1), (3, 4)]).unwrap();
        assert_eq!(c6, Graph::cycle(4));
    }

    #[test]
    fn distance_examples() {
        let d: Vec<_> = Graph::path(4)
            .distances(0)
            .into_iter()
            .map(Option::unwrap)
            .collect();
        assert_eq!(d, vec![0, 1, 2, 3]);
        assert_eq!(
            Graph::complete(4).distances(2),
            vec![Some(1), Some(1), Some(0), Some(1)]
        );
        assert_eq!(Graph::new(2).distances(0), vec![Some(0), None]);
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(Graph::cycle(6).diameter(), Some(3));
        assert_eq!(Graph::new(1).diameter(), Some(0));
        for n in 1..8 {
            assert_eq!(Graph::path(n).diameter(), Some(n - 1));
        }
        assert_eq!(Graph::new(2).diameter(), None);
    }

    #[test]
    fn union_join_complement() {
        let k1 = Graph::new(1);
        assert_eq!(Graph::join(&k1, &k1), Graph::complete(2));
        let two = Graph::new(2);
        // join(2K1, 2K1): 0,1 | 2,3 with all cross edges = C4 0-2-1-3-0.
        let c4 = Graph::join(&two, &two);
        assert_eq!(
            c4,
            Graph::from_edges(4, [(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap()
        );
        let g = Graph::path(5);
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn induced_subgraph_rejects_foreign_vertex() {
        assert!(Graph::path(3).induced_subgraph(&[0, 7]).is_err());
        let h = Graph::cycle(5).induced_subgraph(&[4, 0, 1]).unwrap();
        assert_eq!(h, Graph::path(3));
    }

    #[test]
    fn chordality_examples() {
        assert_eq!(chordality(&Graph::cycle(7)).unwrap(), 7);
        assert_eq!(chordality(&Graph::path(6)).unwrap(), 0);
        assert_eq!(chordality(&Graph::complete(4)).unwrap(), 3);
        assert_eq!(chordality(&Graph::complete_bipartite(2, 3)).unwrap(), 4);
        assert!(matches!(chordality(&Graph::new(17)), Err(Error::Capacity { .. })));
    }

    #[test]
    fn chordal_test_matches_induced_cycle_search() {
        assert!(is_chordal(&Graph::complete(5)));
        assert!(is_chordal(&Graph::path(5)));
        assert!(!is_chordal(&Graph::cycle(4)));
        assert!(!is_chordal(&Graph::cycle(6)));
    }

    #[test]
    fn clique_number_examples() {
        assert_eq!(Graph::complete(5).clique_number(), 5);
        assert_eq!(Graph::cycle(5).clique_number(), 2);
        assert_eq!(Graph::new(3).clique_number(), 1);
        assert_eq!(Graph::new(0).clique_number(), 0);
    }

    #[test]
    fn mask_helpers() {
        let c6 = Graph::cycle(6);
        assert_eq!(mask_diameter(&c6.masks()), Some(3));
        assert_eq!(mask_diameter(&Graph::new(2).masks()), None);
    }
}
