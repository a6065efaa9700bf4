//! Clique-matchings and nice structures (bags of size one or two) by exhaustive search.

use serde::Serialize;

use super::{check_cap, OracleConfig};
use crate::error::{Error, Result};
use crate::graph::{ones64, Edge, Graph, Vertex};

/// Whether `m` is a matching of `g` in which every two edges are joined by an edge.
pub fn is_clique_matching(g: &Graph, m: &[Edge]) -> bool {
    let mut used = vec![false; g.n()];
    for &(a, b) in m {
        if !g.has_edge(a, b) || used[a] || used[b] {
            return false;
        }
        used[a] = true;
        used[b] = true;
    }
    m.iter()
        .enumerate()
        .all(|(i, &e)| m[i + 1..].iter().all(|&f| touching(g, e, f)))
}

fn touching(g: &Graph, (a, b): Edge, (c, d): Edge) -> bool {
    g.has_edge(a, c) || g.has_edge(a, d) || g.has_edge(b, c) || g.has_edge(b, d)
}

/// Edges of `g` and the compatibility relation between them (disjoint and touching).
struct EdgeGraph {
    edges: Vec<Edge>,
    compat: Vec<u128>,
}

impl EdgeGraph {
    fn new(g: &Graph) -> Result<Self> {
        let edges = g.edges();
        if edges.len() > 128 {
            return Err(Error::capacity(
                "edge count for matching search",
                edges.len(),
                128,
            ));
        }
        let compat = edges
            .iter()
            .map(|&e| {
                edges.iter().enumerate().fold(0u128, |acc, (j, &f)| {
                    let disjoint = e.0 != f.0 && e.0 != f.1 && e.1 != f.0 && e.1 != f.1;
                    if disjoint && touching(g, e, f) {
                        acc | (1 << j)
                    } else {
                        acc
                    }
                })
            })
            .collect();
        Ok(EdgeGraph { edges, compat })
    }

    fn all(&self) -> u128 {
        if self.edges.len() == 128 {
            u128::MAX
        } else {
            (1u128 << self.edges.len()) - 1
        }
    }

    fn max_clique(&self, current: &mut Vec<usize>, cand: u128, best: &mut Vec<usize>) {
        if current.len() > best.len() {
            *best = current.clone();
        }
        let mut cand = cand;
        while cand != 0 {
            if current.len() + cand.count_ones() as usize <= best.len() {
                return;
            }
            let i = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            current.push(i);
            self.max_clique(current, cand & self.compat[i], best);
            current.pop();
        }
    }

    fn each_clique(&self, current: &mut Vec<usize>, cand: u128, f: &mut dyn FnMut(&[usize])) {
        f(current);
        let mut cand = cand;
        while cand != 0 {
            let i = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            current.push(i);
            self.each_clique(current, cand & self.compat[i], f);
            current.pop();
        }
    }
}

/// A maximum clique-matching of `g`.
pub fn clique_matching_oracle(g: &Graph) -> Result<(usize, Vec<Edge>)> {
    clique_matching_oracle_with(g, &OracleConfig::default())
}

pub fn clique_matching_oracle_with(g: &Graph, cfg: &OracleConfig) -> Result<(usize, Vec<Edge>)> {
    check_cap("vertex count for matching search", g.n(), cfg.matching_cap)?;
    let eg = EdgeGraph::new(g)?;
    let mut best = Vec::new();
    eg.max_clique(&mut Vec::new(), eg.all(), &mut best);
    let m: Vec<Edge> = best.iter().map(|&i| eg.edges[i]).collect();
    Ok((m.len(), m))
}

/// Every clique-matching of `g` (including the empty one), in search order.
pub fn clique_matchings(g: &Graph, cfg: &OracleConfig) -> Result<Vec<Vec<Edge>>> {
    check_cap("vertex count for matching search", g.n(), cfg.matching_cap)?;
    let eg = EdgeGraph::new(g)?;
    let mut out = Vec::new();
    eg.each_clique(&mut Vec::new(), eg.all(), &mut |c| {
        out.push(c.iter().map(|&i| eg.edges[i]).collect())
    });
    Ok(out)
}

/// A largest set of singletons that can join the edge-bags of `m`: a maximum clique among the
/// unused vertices adjacent to every edge-bag, truncated to `max_singletons`.
pub fn best_singletons(g: &Graph, m: &[Edge], max_singletons: Option<usize>) -> Vec<Vertex> {
    let adj = g.masks();
    let mut common: u64 = if g.n() == 64 {
        u64::MAX
    } else {
        (1u64 << g.n()) - 1
    };
    for &(a, b) in m {
        common &= !(1 << a) & !(1 << b);
        common &= adj[a] | adj[b];
    }
    let mut best = 0u64;
    mask_clique(&adj, 0, common, &mut best);
    let mut out: Vec<Vertex> = ones64(best).collect();
    if let Some(k) = max_singletons {
        out.truncate(k);
    }
    out
}

fn mask_clique(adj: &[u64], current: u64, cand: u64, best: &mut u64) {
    if current.count_ones() > best.count_ones() {
        *best = current;
    }
    let mut cand = cand;
    while cand != 0 {
        if current.count_ones() + cand.count_ones() <= best.count_ones() {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        mask_clique(adj, current | (1 << v), cand & adj[v], best);
    }
}

/// Per-`r` maxima over nice complete-target structures.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NiceTable {
    /// `per_r[r]` is the largest `p` over structures with exactly `r` edge-bags (0 if none);
    /// indexed `0..=n`.
    pub per_r: Vec<usize>,
    pub best: usize,
    /// Bags of a structure reaching `best`: edge-bags first, then singletons.
    pub witness_bags: Vec<Vec<Vertex>>,
}

/// Enumerates all nice structures whose bags are pairwise adjacent.
pub fn nice_structure_oracle(g: &Graph) -> Result<NiceTable> {
    nice_structure_oracle_with(g, &OracleConfig::default(), None)
}

/// As [`nice_structure_oracle`], allowing at most `max_singletons` singleton bags when given.
pub fn nice_structure_oracle_with(
    g: &Graph,
    cfg: &OracleConfig,
    max_singletons: Option<usize>,
) -> Result<NiceTable> {
    let n = g.n();
    let mut table = NiceTable {
        per_r: vec![0; n + 1],
        best: 0,
        witness_bags: Vec::new(),
    };
    for m in clique_matchings(g, cfg)? {
        let singles = best_singletons(g, &m, max_singletons);
        let p = m.len() + singles.len();
        let r = m.len();
        table.per_r[r] = table.per_r[r].max(p);
        if p > table.best {
            table.best = p;
            table.witness_bags = m
                .iter()
                .map(|&(a, b)| vec![a, b])
                .chain(singles.iter().map(|&v| vec![v]))
                .collect();
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness::{verify_witness, WitnessMode, WitnessStructure};

    #[test]
    fn clique_matching_examples() {
        assert_eq!(
            clique_matching_oracle(&Graph::complete_bipartite(1, 3))
                .unwrap()
                .0,
            1
        );
        let (size, m) = clique_matching_oracle(&Graph::path(4)).unwrap();
        assert_eq!((size, m), (2, vec![(0, 1), (2, 3)]));
        assert_eq!(clique_matching_oracle(&Graph::new(4)).unwrap().0, 0);
        assert_eq!(
            clique_matching_oracle(&Graph::complete_bipartite(3, 3))
                .unwrap()
                .0,
            3
        );
    }

    #[test]
    fn clique_matching_check() {
        let g = Graph::path(6);
        assert!(is_clique_matching(&g, &[(0, 1), (2, 3)]));
        assert!(!is_clique_matching(&g, &[(0, 1), (3, 4)]));
        assert!(!is_clique_matching(&g, &[(0, 1), (1, 2)]));
        assert!(!is_clique_matching(&g, &[(0, 2)]));
    }

    #[test]
    fn nice_tables() {
        assert_eq!(
            nice_structure_oracle(&Graph::complete(2)).unwrap().per_r,
            vec![2, 1, 0]
        );
        let c4 = nice_structure_oracle(&Graph::cycle(4)).unwrap();
        assert_eq!(c4.per_r, vec![2, 3, 2, 0, 0]);
        assert_eq!(c4.best, 3);
        assert_eq!(nice_structure_oracle(&Graph::path(4)).unwrap().best, 2);
    }

    #[test]
    fn nice_witness_verifies_as_induced_minor() {
        let g = Graph::cycle(4);
        let t = nice_structure_oracle(&g).unwrap();
        let w = WitnessStructure::new(t.witness_bags, WitnessMode::InducedMinor);
        assert!(verify_witness(&g, &Graph::complete(t.best), &w).unwrap());
    }

    #[test]
    fn bipartite_structures_have_at_most_two_singletons() {
        let g = Graph::complete_bipartite(3, 4);
        for m in clique_matchings(&g, &OracleConfig::default()).unwrap() {
            assert!(best_singletons(&g, &m, None).len() <= 2);
        }
    }
}
