//! Bounded-diameter contractions by exhaustive search.

use super::partition::{quotient_masks, PartitionSearch};
use super::{check_cap, OracleConfig, OracleResult, Relabelled};
use crate::error::{Error, Result};
use crate::graph::{mask_diameter, Edge, Graph};

/// Smallest `S` with `|S| <= k_max` and `diam(G/S) <= s`, searched by increasing size; `None` if
/// there is none. Among sets of the smallest size, the lexicographically first is returned.
pub fn min_club_contraction_oracle(g: &Graph, s: usize, k_max: usize) -> Result<Option<Vec<Edge>>> {
    min_club_contraction_oracle_with(g, s, k_max, &OracleConfig::default())
}

pub fn min_club_contraction_oracle_with(
    g: &Graph,
    s: usize,
    k_max: usize,
    cfg: &OracleConfig,
) -> Result<Option<Vec<Edge>>> {
    let n = g.n();
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    check_cap("vertex count for contraction search", n, super::MASK_LIMIT)?;
    let edges = g.edges();
    let k_max = k_max.min(n.saturating_sub(1));
    let mut total: u64 = 0;
    let mut c: u64 = 1;
    for i in 0..=k_max {
        if i > 0 {
            c = c.saturating_mul((edges.len() + 1 - i) as u64) / i as u64;
        }
        total = total.saturating_add(c);
    }
    if total > cfg.subset_budget {
        return Err(Error::capacity(
            "edge subsets for contraction search",
            usize::try_from(total).unwrap_or(usize::MAX),
            usize::try_from(cfg.subset_budget).unwrap_or(usize::MAX),
        ));
    }
    let adj = g.masks();
    let mut search = SubsetSearch {
        adj: &adj,
        edges: &edges,
        s,
        chosen: Vec::new(),
    };
    for size in 0..=k_max {
        let comp: Vec<u8> = (0..n as u8).collect();
        if search.pick(0, size, &comp) {
            return Ok(Some(search.chosen.iter().map(|&i| edges[i]).collect()));
        }
    }
    Ok(None)
}

struct SubsetSearch<'a> {
    adj: &'a [u64],
    edges: &'a [Edge],
    s: usize,
    chosen: Vec<usize>,
}

impl SubsetSearch<'_> {
    /// Extends `chosen` by `left` more edges from index `from` on, keeping it a forest;
    /// `comp[v]` is the smallest vertex of `v`'s class so far.
    fn pick(&mut self, from: usize, left: usize, comp: &[u8]) -> bool {
        if left == 0 {
            return self.accepts(comp);
        }
        for i in from..self.edges.len() {
            if self.edges.len() - i < left {
                break;
            }
            let (a, b) = self.edges[i];
            let (ca, cb) = (comp[a], comp[b]);
            if ca == cb {
                continue;
            }
            let (keep, gone) = if ca < cb { (ca, cb) } else { (cb, ca) };
            let next: Vec<u8> = comp.iter().map(|&c| if c == gone { keep } else { c }).collect();
            self.chosen.push(i);
            if self.pick(i + 1, left - 1, &next) {
                return true;
            }
            self.chosen.pop();
        }
        false
    }

    fn accepts(&self, comp: &[u8]) -> bool {
        let mut blocks: Vec<u64> = Vec::new();
        let mut slot = [usize::MAX; 64];
        for (v, &c) in comp.iter().enumerate() {
            let c = usize::from(c);
            if slot[c] == usize::MAX {
                slot[c] = blocks.len();
                blocks.push(0);
            }
            blocks[slot[c]] |= 1 << v;
        }
        mask_diameter(&quotient_masks(self.adj, &blocks)).is_some_and(|d| d <= self.s)
    }
}

/// Largest `p` such that `g` contracts to a `p`-vertex graph of diameter at most `s`.
pub fn max_s_club_minor_oracle(g: &Graph, s: usize) -> Result<OracleResult> {
    max_s_club_minor_oracle_with(g, s, &OracleConfig::default())
}

pub fn max_s_club_minor_oracle_with(g: &Graph, s: usize, cfg: &OracleConfig) -> Result<OracleResult> {
    let n = g.n();
    if n == 0 {
        return Ok(OracleResult {
            value: 0,
            witness_bags: Vec::new(),
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.diameter().is_some_and(|d| d <= s) {
        return Ok(OracleResult {
            value: n,
            witness_bags: (0..n).map(|v| vec![v]).collect(),
        });
    }
    check_cap("vertex count for partition enumeration", n, cfg.partition_cap)?;
    let r = Relabelled::new(g, &(0..n).collect::<Vec<_>>());
    let adj = r.graph.masks();
    let accept = |blocks: &[u64]| mask_diameter(&quotient_masks(&adj, blocks)).is_some_and(|d| d <= s);
    let search = PartitionSearch {
        adj: &adj,
        require_clique: false,
        allow_drop: false,
        ceiling: n,
        accept: &accept,
    };
    let (value, blocks) = search
        .run(0, cfg.threads)
        .expect("the single-block partition qualifies");
    Ok(OracleResult {
        value,
        witness_bags: r.bags(&blocks),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paths_need_diameter_minus_s() {
        for n in 3..9 {
            for s in 1..n - 1 {
                let sol = min_club_contraction_oracle(&Graph::path(n), s, n)
                    .unwrap()
                    .unwrap();
                assert_eq!(sol.len(), n - 1 - s);
            }
        }
    }

    #[test]
    fn small_diameter_needs_nothing() {
        assert_eq!(
            min_club_contraction_oracle(&Graph::cycle(4), 2, 3).unwrap(),
            Some(vec![])
        );
    }

    #[test]
    fn c6_one_edge() {
        assert_eq!(
            min_club_contraction_oracle(&Graph::cycle(6), 2, 3).unwrap(),
            Some(vec![(0, 1)])
        );
        assert_eq!(max_s_club_minor_oracle(&Graph::cycle(6), 2).unwrap().value, 5);
    }

    #[test]
    fn budget_exhausted() {
        let none = min_club_contraction_oracle(&Graph::path(6), 1, 2).unwrap();
        assert_eq!(none, None);
        let tight = OracleConfig {
            subset_budget: 3,
            ..OracleConfig::default()
        };
        assert!(matches!(
            min_club_contraction_oracle_with(&Graph::path(6), 1, 2, &tight),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn minor_examples() {
        assert_eq!(max_s_club_minor_oracle(&Graph::path(5), 2).unwrap().value, 3);
        assert_eq!(max_s_club_minor_oracle(&Graph::complete(4), 1).unwrap().value, 4);
        assert!(matches!(
            max_s_club_minor_oracle(&Graph::new(2), 2),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn minor_and_contraction_sizes_agree() {
        for g in [Graph::cycle(7), Graph::path(7), Graph::complete_bipartite(2, 5)] {
            for s in 1..4 {
                let p = max_s_club_minor_oracle(&g, s).unwrap().value;
                let k = min_club_contraction_oracle(&g, s, g.n() - 1)
                    .unwrap()
                    .unwrap()
                    .len();
                assert_eq!(p, g.n() - k);
            }
        }
    }
}
