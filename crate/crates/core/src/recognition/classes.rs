use crate::error::Result;
use crate::graph::{chordality_capped, Graph, DEFAULT_CHORDALITY_CAP};

/// Split test by the degree-sequence characterization.
pub fn is_split(g: &Graph) -> bool {
    let mut deg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    deg.sort_unstable_by(|a, b| b.cmp(a));
    let m = deg
        .iter()
        .enumerate()
        .filter(|&(i, &d)| d >= i)
        .map(|(i, _)| i + 1)
        .max()
        .unwrap_or(0);
    let head: usize = deg[..m].iter().sum();
    let tail: usize = deg[m..].iter().sum();
    head == m * m.saturating_sub(1) + tail
}

pub fn is_cobipartite(g: &Graph) -> bool {
    g.complement().is_bipartite()
}

pub fn is_chordal_bipartite(g: &Graph) -> Result<bool> {
    is_chordal_bipartite_capped(g, DEFAULT_CHORDALITY_CAP)
}

pub fn is_chordal_bipartite_capped(g: &Graph, cap: usize) -> Result<bool> {
    if !g.is_bipartite() {
        return Ok(false);
    }
    Ok(chordality_capped(g, cap)? <= 4)
}
