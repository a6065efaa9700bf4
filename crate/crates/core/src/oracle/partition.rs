//! Depth-first enumeration of connected vertex partitions as restricted-growth sequences.
//!
//! Vertices are assigned in a fixed order to an existing block or a fresh one. A branch is cut as
//! soon as some block can no longer become connected, or when even one block per unassigned vertex
//! could not beat the best value so far.

use rayon::prelude::*;

use crate::graph::ones64;

/// Depth at which the search tree is cut into independent tasks.
const SPLIT_DEPTH: usize = 5;

pub(crate) struct PartitionSearch<'a> {
    pub adj: &'a [u64],
    /// Every pair of blocks must end up adjacent.
    pub require_clique: bool,
    /// Vertices may stay outside every block (minor semantics instead of contraction).
    pub allow_drop: bool,
    /// Hard ceiling on the value; the search stops once it is reached.
    pub ceiling: usize,
    pub accept: &'a (dyn Fn(&[u64]) -> bool + Sync),
}

impl PartitionSearch<'_> {
    fn n(&self) -> usize {
        self.adj.len()
    }

    fn unassigned(&self, next: usize) -> u64 {
        let n = self.n();
        if next >= n {
            0
        } else {
            let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
            all & !((1u64 << next) - 1)
        }
    }

    fn nbr(&self, set: u64) -> u64 {
        ones64(set).fold(0, |acc, v| acc | self.adj[v])
    }

    /// Whether the partial assignment of vertices `0..next` can still be completed.
    fn feasible(&self, blocks: &[u64], next: usize) -> bool {
        let free = self.unassigned(next);
        for (i, &b) in blocks.iter().enumerate() {
            if !reaches_all(self.adj, b, b | free) {
                return false;
            }
            if self.require_clique {
                let nb = self.nbr(b);
                if nb & free == 0 && blocks.iter().enumerate().any(|(j, &c)| j != i && nb & c == 0) {
                    return false;
                }
            }
        }
        true
    }

    /// Best accepted partition with more than `floor` blocks; ties keep the first in search order.
    pub(crate) fn run(&self, floor: usize, threads: usize) -> Option<(usize, Vec<u64>)> {
        let n = self.n();
        if n == 0 {
            return None;
        }
        let depth = SPLIT_DEPTH.min(n);
        let mut prefixes = Vec::new();
        self.collect_prefixes(&mut Vec::new(), 0, depth, &mut prefixes);
        let solve = |blocks: &Vec<u64>, floor: usize| {
            let mut state = Best {
                value: floor,
                blocks: None,
            };
            let mut blocks = blocks.clone();
            self.dfs(&mut blocks, depth, &mut state);
            state.blocks.map(|b| (state.value, b))
        };
        let results: Vec<Option<(usize, Vec<u64>)>> = if threads <= 1 {
            // Carrying the running best forward only skips subtrees that cannot beat it, so the
            // first maximum in search order is the same one the parallel merge picks.
            let mut out = Vec::with_capacity(prefixes.len());
            let mut running = floor;
            for p in &prefixes {
                let r = solve(p, running);
                if let Some((v, _)) = &r {
                    running = *v;
                }
                out.push(r);
                if running >= self.ceiling {
                    break;
                }
            }
            out
        } else {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .expect("thread pool");
            pool.install(|| prefixes.par_iter().map(|p| solve(p, floor)).collect())
        };
        let mut best: Option<(usize, Vec<u64>)> = None;
        for r in results.into_iter().flatten() {
            if best.as_ref().is_none_or(|(v, _)| r.0 > *v) {
                best = Some(r);
            }
        }
        best
    }

    fn collect_prefixes(&self, blocks: &mut Vec<u64>, next: usize, depth: usize, out: &mut Vec<Vec<u64>>) {
        if !self.feasible(blocks, next) {
            return;
        }
        if next == depth {
            out.push(blocks.clone());
            return;
        }
        self.branch(blocks, next, &mut |s, blocks| {
            s.collect_prefixes(blocks, next + 1, depth, out)
        });
    }

    fn branch(&self, blocks: &mut Vec<u64>, v: usize, f: &mut dyn FnMut(&Self, &mut Vec<u64>)) {
        let bit = 1u64 << v;
        for i in 0..blocks.len() {
            blocks[i] |= bit;
            f(self, blocks);
            blocks[i] &= !bit;
        }
        blocks.push(bit);
        f(self, blocks);
        blocks.pop();
        if self.allow_drop {
            f(self, blocks);
        }
    }

    fn dfs(&self, blocks: &mut Vec<u64>, next: usize, best: &mut Best) {
        if best.value >= self.ceiling && best.blocks.is_some() {
            return;
        }
        if blocks.len() + (self.n() - next) <= best.value {
            return;
        }
        if !self.feasible(blocks, next) {
            return;
        }
        if next == self.n() {
            if (self.accept)(blocks) {
                best.value = blocks.len();
                best.blocks = Some(blocks.clone());
            }
            return;
        }
        self.branch(blocks, next, &mut |s, blocks| s.dfs(blocks, next + 1, best));
    }
}

struct Best {
    value: usize,
    blocks: Option<Vec<u64>>,
}

/// Whether all of `target` lies in one component of the graph induced by `within`.
fn reaches_all(adj: &[u64], target: u64, within: u64) -> bool {
    let start = target & target.wrapping_neg();
    let mut seen = start;
    let mut frontier = start;
    while frontier != 0 {
        let mut next = 0;
        for v in ones64(frontier) {
            next |= adj[v];
        }
        next &= within & !seen;
        seen |= next;
        frontier = next;
        if seen & target == target {
            return true;
        }
    }
    seen & target == target
}

/// Adjacency masks of the quotient by `blocks`.
pub(crate) fn quotient_masks(adj: &[u64], blocks: &[u64]) -> Vec<u64> {
    let nbrs: Vec<u64> = blocks
        .iter()
        .map(|&b| ones64(b).fold(0, |acc, v| acc | adj[v]))
        .collect();
    (0..blocks.len())
        .map(|i| {
            (0..blocks.len())
                .filter(|&j| j != i && nbrs[i] & blocks[j] != 0)
                .fold(0u64, |acc, j| acc | (1 << j))
        })
        .collect()
}

/// Whether every two blocks are joined by an edge.
pub(crate) fn pairwise_adjacent(adj: &[u64], blocks: &[u64]) -> bool {
    let nbrs: Vec<u64> = blocks
        .iter()
        .map(|&b| ones64(b).fold(0, |acc, v| acc | adj[v]))
        .collect();
    (0..blocks.len()).all(|i| (i + 1..blocks.len()).all(|j| nbrs[i] & blocks[j] != 0))
}
