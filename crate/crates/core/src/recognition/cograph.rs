use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::graph::{Graph, Vertex};

/// Canonical cotree: children are listed by smallest leaf and never share their parent's type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Cotree {
    Leaf(Vertex),
    Union(Vec<Cotree>),
    Join(Vec<Cotree>),
}

impl Cotree {
    pub fn leaves(&self) -> Vec<Vertex> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<Vertex>) {
        match self {
            Cotree::Leaf(v) => out.push(*v),
            Cotree::Union(ch) | Cotree::Join(ch) => ch.iter().for_each(|c| c.collect_leaves(out)),
        }
    }

    fn min_leaf(&self) -> Vertex {
        match self {
            Cotree::Leaf(v) => *v,
            Cotree::Union(ch) | Cotree::Join(ch) => ch[0].min_leaf(),
        }
    }

    /// The graph on `n` vertices in which two leaves are adjacent iff their lowest common ancestor
    /// is a join node.
    pub fn to_graph(&self, n: usize) -> Graph {
        let mut g = Graph::new(n);
        self.add_edges(&mut g);
        g
    }

    fn add_edges(&self, g: &mut Graph) {
        match self {
            Cotree::Leaf(_) => {}
            Cotree::Union(ch) => ch.iter().for_each(|c| c.add_edges(g)),
            Cotree::Join(ch) => {
                let parts: Vec<Vec<Vertex>> = ch.iter().map(Cotree::leaves).collect();
                for (i, a) in parts.iter().enumerate() {
                    for b in &parts[i + 1..] {
                        for &x in a {
                            for &y in b {
                                g.add_edge(x, y);
                            }
                        }
                    }
                }
                ch.iter().for_each(|c| c.add_edges(g));
            }
        }
    }

    fn is_canonical(&self) -> bool {
        match self {
            Cotree::Leaf(_) => true,
            Cotree::Union(ch) => {
                ch.len() >= 2
                    && ch
                        .iter()
                        .all(|c| !matches!(c, Cotree::Union(_)) && c.is_canonical())
            }
            Cotree::Join(ch) => {
                ch.len() >= 2
                    && ch
                        .iter()
                        .all(|c| !matches!(c, Cotree::Join(_)) && c.is_canonical())
            }
        }
    }
}

impl fmt::Display for Cotree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (tag, ch) = match self {
            Cotree::Leaf(v) => return write!(f, "{v}"),
            Cotree::Union(ch) => ('U', ch),
            Cotree::Join(ch) => ('J', ch),
        };
        write!(f, "{tag}(")?;
        for (i, c) in ch.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// A cotree of `g`, or four vertices `(a, b, c, d)` inducing the path `a-b-c-d`.
pub fn recognize_cograph(g: &Graph) -> Result<Option<Cotree>, [Vertex; 4]> {
    if g.n() == 0 {
        return Ok(None);
    }
    let all: Vec<Vertex> = (0..g.n()).collect();
    decompose(g, &all).map(Some)
}

/// Whether `t` is a canonical cotree whose leaves are exactly `V(g)` and which reproduces `E(g)`.
pub fn verify_cotree(g: &Graph, t: &Cotree) -> bool {
    let mut leaves = t.leaves();
    leaves.sort_unstable();
    leaves == (0..g.n()).collect::<Vec<_>>() && t.is_canonical() && t.to_graph(g.n()) == *g
}

fn decompose(g: &Graph, verts: &[Vertex]) -> Result<Cotree, [Vertex; 4]> {
    if verts.len() == 1 {
        return Ok(Cotree::Leaf(verts[0]));
    }
    let parts = split(g, verts, false);
    if parts.len() > 1 {
        return children(g, parts).map(Cotree::Union);
    }
    let parts = split(g, verts, true);
    if parts.len() > 1 {
        return children(g, parts).map(Cotree::Join);
    }
    Err(find_p4(g, verts).expect("a prime graph with both sides connected contains an induced P4"))
}

fn children(g: &Graph, parts: Vec<Vec<Vertex>>) -> Result<Vec<Cotree>, [Vertex; 4]> {
    let mut out = parts
        .iter()
        .map(|p| decompose(g, p))
        .collect::<Result<Vec<_>, _>>()?;
    out.sort_by_key(Cotree::min_leaf);
    Ok(out)
}

/// Components of `G[verts]`, or of its complement when `complement` is set.
fn split(g: &Graph, verts: &[Vertex], complement: bool) -> Vec<Vec<Vertex>> {
    let mut left = FixedBitSet::with_capacity(g.n());
    verts.iter().for_each(|&v| left.insert(v));
    let mut parts = Vec::new();
    while let Some(s) = left.minimum() {
        left.set(s, false);
        let mut part = vec![s];
        let mut i = 0;
        while i < part.len() {
            let x = part[i];
            i += 1;
            let mut next = left.clone();
            if complement {
                next.difference_with(g.neighborhood(x));
            } else {
                next.intersect_with(g.neighborhood(x));
            }
            for y in next.ones() {
                left.set(y, false);
                part.push(y);
            }
        }
        part.sort_unstable();
        parts.push(part);
    }
    parts
}

/// First induced P4 `a-b-c-d` inside `verts`, scanning middle edges `(b, c)` in lexicographic order.
pub(crate) fn find_p4(g: &Graph, verts: &[Vertex]) -> Option<[Vertex; 4]> {
    let mut inside = FixedBitSet::with_capacity(g.n());
    verts.iter().for_each(|&v| inside.insert(v));
    for &b in verts {
        for &c in verts {
            if b == c || !g.has_edge(b, c) {
                continue;
            }
            let mut a_side = g.neighborhood(b).clone();
            a_side.intersect_with(&inside);
            a_side.difference_with(&g.closed_neighborhood(c));
            if a_side.is_clear() {
                continue;
            }
            let mut d_side = g.neighborhood(c).clone();
            d_side.intersect_with(&inside);
            d_side.difference_with(&g.closed_neighborhood(b));
            for a in a_side.ones() {
                if let Some(d) = d_side.ones().find(|&d| !g.has_edge(a, d)) {
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_is_a_leaf() {
        assert_eq!(recognize_cograph(&Graph::new(1)), Ok(Some(Cotree::Leaf(0))));
    }

    #[test]
    fn p4_certificate() {
        assert_eq!(recognize_cograph(&Graph::path(4)), Err([0, 1, 2, 3]));
    }

    #[test]
    fn c4_is_join_of_unions() {
        let t = recognize_cograph(&Graph::cycle(4)).unwrap().unwrap();
        assert_eq!(t.to_string(), "J(U(0,2),U(1,3))");
        assert!(verify_cotree(&Graph::cycle(4), &t));
    }

    #[test]
    fn complete_multipartite() {
        let g = Graph::join(&Graph::join(&Graph::new(2), &Graph::new(2)), &Graph::new(2));
        let t = recognize_cograph(&g).unwrap().unwrap();
        assert_eq!(t.to_string(), "J(U(0,1),U(2,3),U(4,5))");
    }

    #[test]
    fn p4_inside_larger_graph_is_induced() {
        let g = Graph::cycle(5);
        let [a, b, c, d] = recognize_cograph(&g).unwrap_err();
        assert!(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d));
        assert!(!g.has_edge(a, c) && !g.has_edge(b, d) && !g.has_edge(a, d));
    }
}
