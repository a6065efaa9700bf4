//! Exhaustive ground truth for every solver, meant for small graphs.
//!
//! All searches run on 64-bit adjacency masks and refuse instances above configurable limits.

mod club;
mod matching;
mod partition;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{ones64, Graph, Vertex};

pub use club::{
    max_s_club_minor_oracle, max_s_club_minor_oracle_with, min_club_contraction_oracle,
    min_club_contraction_oracle_with,
};
pub use matching::{
    best_singletons, clique_matching_oracle, clique_matching_oracle_with, clique_matchings,
    is_clique_matching, nice_structure_oracle, nice_structure_oracle_with, NiceTable,
};
pub(crate) use partition::pairwise_adjacent;
use partition::PartitionSearch;

/// Limits and parallelism for the exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest component handled by partition enumeration.
    pub partition_cap: usize,
    /// Largest graph handled by the matching searches.
    pub matching_cap: usize,
    /// Largest number of edge subsets the contraction search may visit.
    pub subset_budget: u64,
    /// Worker threads for partition enumeration; results do not depend on it.
    pub threads: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            partition_cap: 12,
            matching_cap: 14,
            subset_budget: 20_000_000,
            threads: 1,
        }
    }
}

impl OracleConfig {
    /// Same limits with every vertex cap replaced by `cap`.
    pub fn with_cap(self, cap: usize) -> Self {
        OracleConfig {
            partition_cap: cap,
            matching_cap: cap,
            ..self
        }
    }
}

/// Hard limit of the mask representation.
pub const MASK_LIMIT: usize = 64;

/// Value of an optimization together with the bags realizing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub value: usize,
    pub witness_bags: Vec<Vec<Vertex>>,
}

/// A component relabelled in breadth-first order, with the map back to original labels.
pub(crate) struct Relabelled {
    pub graph: Graph,
    pub original: Vec<Vertex>,
}

impl Relabelled {
    pub fn new(g: &Graph, comp: &[Vertex]) -> Self {
        let mut order = vec![comp[0]];
        let mut seen = vec![false; g.n()];
        seen[comp[0]] = true;
        let mut i = 0;
        while i < order.len() {
            let x = order[i];
            i += 1;
            for y in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    order.push(y);
                }
            }
        }
        debug_assert_eq!(order.len(), comp.len());
        let graph = g.induced_subgraph(&order).expect("component vertices are valid");
        Relabelled {
            graph,
            original: order,
        }
    }

    pub fn bags(&self, blocks: &[u64]) -> Vec<Vec<Vertex>> {
        let mut bags: Vec<Vec<Vertex>> = blocks
            .iter()
            .map(|&b| {
                let mut bag: Vec<Vertex> = ones64(b).map(|v| self.original[v]).collect();
                bag.sort_unstable();
                bag
            })
            .collect();
        bags.sort();
        bags
    }
}

pub(crate) fn check_cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
    let limit = cap.min(MASK_LIMIT);
    if size > limit {
        return Err(Error::capacity(what, size, limit));
    }
    Ok(())
}

/// Largest `p` with `K_p` a minor of `g`, with a `K_p`-contraction structure of one component.
pub fn hadwiger_oracle(g: &Graph) -> Result<OracleResult> {
    hadwiger_oracle_with(g, &OracleConfig::default())
}

pub fn hadwiger_oracle_with(g: &Graph, cfg: &OracleConfig) -> Result<OracleResult> {
    hadwiger_search(g, cfg, false)
}

/// The same value computed over partial partitions (vertices may be deleted), i.e. by the minor
/// definition directly. Slower; used to cross-check the contraction formulation.
pub fn hadwiger_minor_oracle(g: &Graph, cfg: &OracleConfig) -> Result<OracleResult> {
    hadwiger_search(g, cfg, true)
}

fn hadwiger_search(g: &Graph, cfg: &OracleConfig, allow_drop: bool) -> Result<OracleResult> {
    let comps = g.components();
    for comp in &comps {
        check_cap(
            "component size for partition enumeration",
            comp.len(),
            cfg.partition_cap,
        )?;
    }
    let mut best = OracleResult {
        value: 0,
        witness_bags: Vec::new(),
    };
    for comp in &comps {
        let r = Relabelled::new(g, comp);
        let adj = r.graph.masks();
        let omega = r.graph.clique_number();
        let m = r.graph.m();
        // K_p needs p(p-1)/2 edges.
        let edge_bound = (1..=comp.len())
            .take_while(|p| p * (p - 1) / 2 <= m)
            .last()
            .unwrap_or(1);
        if edge_bound <= best.value {
            continue;
        }
        let accept = |blocks: &[u64]| pairwise_adjacent(&adj, blocks);
        let search = PartitionSearch {
            adj: &adj,
            require_clique: true,
            allow_drop,
            ceiling: edge_bound,
            accept: &accept,
        };
        let floor = best.value.max(omega.saturating_sub(1));
        if let Some((value, blocks)) = search.run(floor, cfg.threads) {
            if value > best.value {
                best = OracleResult {
                    value,
                    witness_bags: r.bags(&blocks),
                };
            }
        }
    }
    Ok(best)
}
