//! Witness structures: a partition of (part of) the vertex set into connected bags that realizes a
//! target graph as a minor, induced minor, or contraction.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessMode {
    Minor,
    InducedMinor,
    Contraction,
}

/// `bags[x]` is the bag of target vertex `x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessStructure {
    pub bags: Vec<Vec<Vertex>>,
    pub mode: WitnessMode,
}

impl WitnessStructure {
    pub fn new(bags: Vec<Vec<Vertex>>, mode: WitnessMode) -> Self {
        WitnessStructure { bags, mode }
    }

    /// Bags of the contraction `G/S`, one per block in quotient label order.
    pub fn from_contraction(g: &Graph, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let (block_of, blocks) = g.contraction_classes(edges)?;
        let mut bags = vec![Vec::new(); blocks];
        for (v, &b) in block_of.iter().enumerate() {
            bags[b].push(v);
        }
        Ok(WitnessStructure::new(bags, WitnessMode::Contraction))
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }
}

/// Checks the witness conditions for `target`.
///
/// Returns `Ok(false)` when a bag is disconnected or the required (non-)adjacencies between bags
/// fail, and an error when the bags themselves are malformed (empty, overlapping, foreign vertices,
/// wrong count, or incomplete cover in contraction mode).
pub fn verify_witness(g: &Graph, target: &Graph, w: &WitnessStructure) -> Result<bool> {
    let n = g.n();
    if w.bags.len() != target.n() {
        return Err(Error::InvalidStructure(format!(
            "{} bags for a target on {} vertices",
            w.bags.len(),
            target.n()
        )));
    }
    let mut owner = vec![usize::MAX; n];
    for (x, bag) in w.bags.iter().enumerate() {
        if bag.is_empty() {
            return Err(Error::InvalidStructure(format!("bag {x} is empty")));
        }
        for &v in bag {
            if v >= n {
                return Err(Error::domain(format!("bag {x} holds vertex {v} outside 0..{n}")));
            }
            if owner[v] != usize::MAX {
                return Err(Error::InvalidStructure(format!(
                    "vertex {v} lies in bags {} and {x}",
                    owner[v]
                )));
            }
            owner[v] = x;
        }
    }
    if w.mode == WitnessMode::Contraction {
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::InvalidStructure(format!("vertex {v} is in no bag")));
        }
    }
    for bag in &w.bags {
        if !bag_connected(g, bag, &owner) {
            return Ok(false);
        }
    }
    let p = target.n();
    let mut touch = vec![false; p * p];
    for (u, v) in g.edges() {
        let (a, b) = (owner[u], owner[v]);
        if a != usize::MAX && b != usize::MAX && a != b {
            touch[a * p + b] = true;
            touch[b * p + a] = true;
        }
    }
    for x in 0..p {
        for y in x + 1..p {
            let wanted = target.has_edge(x, y);
            let present = touch[x * p + y];
            if wanted && !present {
                return Ok(false);
            }
            if !wanted && present && w.mode != WitnessMode::Minor {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn bag_connected(g: &Graph, bag: &[Vertex], owner: &[usize]) -> bool {
    let id = owner[bag[0]];
    let mut seen = vec![bag[0]];
    let mut i = 0;
    while i < seen.len() {
        let x = seen[i];
        i += 1;
        for y in g.neighbors(x) {
            if owner[y] == id && !seen.contains(&y) {
                seen.push(y);
            }
        }
    }
    seen.len() == bag.len()
}
