use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// `comp[w][v]` labels the component of `G - N[w]` containing `v`, `usize::MAX` inside `N[w]`.
pub(crate) fn avoidance_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    (0..n)
        .map(|w| {
            let blocked = g.closed_neighborhood(w);
            let mut label = vec![usize::MAX; n];
            let mut next = 0;
            for s in 0..n {
                if blocked.contains(s) || label[s] != usize::MAX {
                    continue;
                }
                label[s] = next;
                let mut stack = vec![s];
                while let Some(x) = stack.pop() {
                    for y in g.neighbors(x) {
                        if !blocked.contains(y) && label[y] == usize::MAX {
                            label[y] = next;
                            stack.push(y);
                        }
                    }
                }
                next += 1;
            }
            label
        })
        .collect()
}

fn linked(comp: &[Vec<usize>], avoid: Vertex, a: Vertex, b: Vertex) -> bool {
    let (ca, cb) = (comp[avoid][a], comp[avoid][b]);
    ca != usize::MAX && ca == cb
}

/// `Ok(())` if `g` has no asteroidal triple, else the lexicographically first one.
pub fn is_at_free(g: &Graph) -> std::result::Result<(), [Vertex; 3]> {
    let n = g.n();
    let comp = avoidance_components(g);
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.has_edge(a, c) || g.has_edge(b, c) {
                    continue;
                }
                if linked(&comp, c, a, b) && linked(&comp, a, b, c) && linked(&comp, b, a, c) {
                    return Err([a, b, c]);
                }
            }
        }
    }
    Ok(())
}

/// Whether every `(u, v)`-path dominates `g`: no `z` leaves `u` and `v` in one component of `G - N[z]`.
pub fn is_dominating_pair(g: &Graph, u: Vertex, v: Vertex) -> bool {
    let comp = avoidance_components(g);
    dominating_with(&comp, g.n(), u, v)
}

fn dominating_with(comp: &[Vec<usize>], n: usize, u: Vertex, v: Vertex) -> bool {
    (0..n).all(|z| !linked(comp, z, u, v))
}

/// The lexicographically smallest pair `u <= v` at distance `diam(g)` that is a dominating pair.
pub fn diameter_dominating_pair(g: &Graph) -> Result<(Vertex, Vertex)> {
    let n = g.n();
    if n == 0 {
        return Err(Error::Precondition("the empty graph has no vertex pair".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if let Err(t) = is_at_free(g) {
        return Err(Error::NotAtFree(t));
    }
    if n == 1 {
        return Ok((0, 0));
    }
    let dist = g.distance_matrix();
    let d = dist.diameter().expect("connected");
    let comp = avoidance_components(g);
    for u in 0..n {
        for v in u + 1..n {
            if dist.at(u, v) == d && dominating_with(&comp, n, u, v) {
                return Ok((u, v));
            }
        }
    }
    Err(Error::Precondition("no diameter dominating pair found".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_paths_and_cycles_are_at_free() {
        for n in 1..8 {
            assert_eq!(is_at_free(&Graph::path(n)), Ok(()));
        }
        for n in 3..6 {
            assert_eq!(is_at_free(&Graph::cycle(n)), Ok(()));
        }
    }

    #[test]
    fn c6_triple() {
        assert_eq!(is_at_free(&Graph::cycle(6)), Err([0, 2, 4]));
    }

    #[test]
    fn subdivided_claw() {
        // Centre 0, legs 0-1-2, 0-3-4, 0-5-6.
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert_eq!(is_at_free(&g), Err([2, 4, 6]));
    }

    #[test]
    fn dominating_pairs() {
        assert_eq!(diameter_dominating_pair(&Graph::path(6)).unwrap(), (0, 5));
        let (u, v) = diameter_dominating_pair(&Graph::cycle(4)).unwrap();
        assert_eq!((u, v), (0, 2));
        assert_eq!(diameter_dominating_pair(&Graph::complete(4)).unwrap(), (0, 1));
        assert!(matches!(
            diameter_dominating_pair(&Graph::cycle(6)),
            Err(Error::NotAtFree(_))
        ));
        assert!(matches!(
            diameter_dominating_pair(&Graph::new(2)),
            Err(Error::Disconnected)
        ));
    }
}
