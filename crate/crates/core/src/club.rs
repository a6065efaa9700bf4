//! s-Club Contraction on AT-free graphs through satisfying paths.

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Edge, Graph, Vertex};
use crate::recognition::{diameter_dominating_pair, is_at_free};

/// Distances from a diameter pair and the far layers of each endpoint.
#[derive(Clone, Debug, Serialize)]
pub struct DistanceProfile {
    pub u: Vertex,
    pub v: Vertex,
    pub d: usize,
    pub x_u: Vec<Vertex>,
    pub y_u: Vec<Vertex>,
    pub x_v: Vec<Vertex>,
    pub y_v: Vec<Vertex>,
    #[serde(skip)]
    dist: DistanceMatrix,
}

impl DistanceProfile {
    pub fn dist(&self, a: Vertex, b: Vertex) -> usize {
        self.dist.at(a, b)
    }
}

pub fn distance_profile(g: &Graph, u: Vertex, v: Vertex) -> Result<DistanceProfile> {
    if u >= g.n() || v >= g.n() {
        return Err(Error::domain("vertex out of range"));
    }
    let dist = g.distance_matrix();
    let d = dist
        .diameter()
        .ok_or_else(|| Error::Precondition("graph is disconnected".into()))?;
    if dist.at(u, v) != d {
        return Err(Error::Precondition(format!("({u}, {v}) is not a diameter pair")));
    }
    let layer = |w: Vertex, at: usize| (0..g.n()).filter(|&x| dist.at(w, x) == at).collect::<Vec<_>>();
    Ok(DistanceProfile {
        u,
        v,
        d,
        x_u: layer(u, d),
        y_u: if d > 0 { layer(u, d - 1) } else { Vec::new() },
        x_v: layer(v, d),
        y_v: if d > 0 { layer(v, d - 1) } else { Vec::new() },
        dist,
    })
}

/// Conditions i)–iii) for the path `q = x_0 .. x_k`, `k >= 1`.
pub fn is_satisfying_path(g: &Graph, prof: &DistanceProfile, q: &[Vertex]) -> Result<bool> {
    if q.len() < 2 || q.iter().any(|&x| x >= g.n()) || !q.iter().all_unique() {
        return Err(Error::domain("not a path of length at least 1"));
    }
    if q.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
        return Err(Error::domain("consecutive vertices are not adjacent"));
    }
    let k = q.len() - 1;
    let p = prof;
    let du = |x| p.dist(p.u, x);
    let dv = |x| p.dist(p.v, x);
    let on_geodesic = du(q[0]) + k + dv(q[k]) == p.d && (0..=k).all(|i| du(q[i]) == du(q[0]) + i);
    Ok(on_geodesic && ends_ok(p, q[0], q[1], q[k - 1], q[k]))
}

/// Conditions ii) and iii), which only involve the two end edges.
fn ends_ok(p: &DistanceProfile, x0: Vertex, x1: Vertex, xk1: Vertex, xk: Vertex) -> bool {
    let a = p.dist(p.u, x0);
    let b = p.dist(p.v, xk);
    p.x_v.iter().all(|&z| p.dist(z, x0) == a)
        && p.x_u.iter().all(|&z| p.dist(z, xk) == b)
        && p.y_v.iter().all(|&z| p.dist(z, x0) <= a || p.dist(z, x1) <= a)
        && p.y_u.iter().all(|&z| p.dist(z, xk) <= b || p.dist(z, xk1) <= b)
}

/// Outcome of the satisfying-path search.
#[derive(Clone, Debug, Default)]
pub struct PathSearch {
    /// First path (in edge-pair order) with `x_0 != u` and `x_k != v`.
    pub free: Option<Vec<Vertex>>,
    /// First path with `x_0 = u`.
    pub from_u: Option<Vec<Vertex>>,
    /// First path with `x_k = v`.
    pub to_v: Option<Vec<Vertex>>,
}

impl PathSearch {
    pub fn any(&self) -> Option<&Vec<Vertex>> {
        self.free.as_ref().or(self.from_u.as_ref()).or(self.to_v.as_ref())
    }

    /// Every path found has `x_0 = u` or `x_k = v`.
    pub fn pinned(&self) -> bool {
        self.free.is_none() && (self.from_u.is_some() || self.to_v.is_some())
    }
}

/// Enumerates ordered edge pairs `(x_0 x_1, x_{k-1} x_k)` and fills the interior greedily.
pub fn find_satisfying_path(g: &Graph, prof: &DistanceProfile, k: usize) -> PathSearch {
    let mut out = PathSearch::default();
    if k < 2 || k > prof.d {
        return out;
    }
    let p = prof;
    let du = |x| p.dist(p.u, x);
    let arcs: Vec<Edge> = g
        .edges()
        .into_iter()
        .flat_map(|(a, b)| [(a, b), (b, a)])
        .filter(|&(a, b)| du(b) == du(a) + 1)
        .sorted()
        .collect();
    for &(x0, x1) in &arcs {
        for &(xk1, xk) in &arcs {
            if du(x0) + k + p.dist(p.v, xk) != p.d
                || du(xk1) != du(x0) + k - 1
                || p.dist(x1, xk1) != k - 2
                || !ends_ok(p, x0, x1, xk1, xk)
            {
                continue;
            }
            let pinned_u = x0 == p.u;
            let pinned_v = xk == p.v;
            let slot = match (pinned_u, pinned_v) {
                (false, false) => &mut out.free,
                (true, _) if out.from_u.is_none() => &mut out.from_u,
                (_, true) if out.to_v.is_none() => &mut out.to_v,
                _ => continue,
            };
            let mut q = vec![x0];
            q.extend(shortest_path(g, p, x1, xk1));
            q.push(xk);
            debug_assert!(is_satisfying_path(g, p, &q).unwrap_or(false));
            #[cfg(debug_assertions)]
            check_shift(g, p, &q);
            *slot = Some(q);
            if out.free.is_some() {
                return out;
            }
        }
    }
    out
}

/// Shortest path from `a` to `b` taking the smallest admissible neighbour at every step.
fn shortest_path(g: &Graph, p: &DistanceProfile, a: Vertex, b: Vertex) -> Vec<Vertex> {
    let mut path = vec![a];
    let mut cur = a;
    while cur != b {
        let left = p.dist(cur, b);
        cur = g
            .neighbors(cur)
            .find(|&w| p.dist(w, b) + 1 == left)
            .expect("a neighbour closer to the target");
        path.push(cur);
    }
    path
}

/// On the full geodesic through `q`, the end conditions at `(x_0, x_1)` persist for every later
/// pair of vertices.
#[cfg(debug_assertions)]
fn check_shift(g: &Graph, p: &DistanceProfile, q: &[Vertex]) {
    let mut path = shortest_path(g, p, p.u, q[0]);
    path.pop();
    path.extend_from_slice(q);
    path.extend(shortest_path(g, p, q[q.len() - 1], p.v).into_iter().skip(1));
    let du = |x| p.dist(p.u, x);
    let holds = |w1: Vertex, w2: Vertex| {
        p.x_v.iter().all(|&z| p.dist(z, w1) == du(w1))
            && p.y_v
                .iter()
                .all(|&z| p.dist(z, w1) <= du(w1) || p.dist(z, w2) < du(w2))
    };
    let a = path.iter().position(|&x| x == q[0]).expect("on path");
    for i in a..path.len() {
        for j in (i + 1).max(a + 1)..path.len() {
            debug_assert!(
                holds(path[i], path[j]),
                "shift property fails at {:?}",
                (path[i], path[j])
            );
        }
    }
}

/// Answer of the decision problem; `Yes` carries an edge set whose contraction has diameter at
/// most `s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "answer", content = "witness_edges", rename_all = "lowercase")]
pub enum ClubDecision {
    Yes(Vec<Edge>),
    No,
}

impl ClubDecision {
    pub fn is_yes(&self) -> bool {
        matches!(self, ClubDecision::Yes(_))
    }
}

/// Can `g` be turned into a graph of diameter at most `s` by contracting at most `k` edges?
pub fn s_club_contract_decide(g: &Graph, k: usize, s: usize) -> Result<ClubDecision> {
    if s < 2 {
        return Err(Error::Unsupported(
            "s <= 1 is NP-hard on AT-free graphs; use the exhaustive oracle".into(),
        ));
    }
    if let Err(t) = is_at_free(g) {
        return Err(Error::NotAtFree(t));
    }
    let Some(d) = g.diameter() else {
        return Ok(ClubDecision::No);
    };
    let out = decide(g, k, s, d)?;
    if let ClubDecision::Yes(w) = &out {
        check_witness(g, w, k, s)?;
    }
    Ok(out)
}

fn check_witness(g: &Graph, w: &[Edge], k: usize, s: usize) -> Result<()> {
    let ok = w.len() <= k && g.contract_edges(w)?.diameter().is_some_and(|d| d <= s);
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidStructure(format!(
            "contracting {w:?} does not reach diameter {s}"
        )))
    }
}

fn decide(g: &Graph, k: usize, s: usize, d: usize) -> Result<ClubDecision> {
    if d <= s {
        return Ok(ClubDecision::Yes(Vec::new()));
    }
    if k < d - s {
        return Ok(ClubDecision::No);
    }
    if k >= d - s + 2 {
        let (u, v) = diameter_dominating_pair(g)?;
        let dist = g.distance_matrix();
        let mut path = vec![u];
        while *path.last().unwrap() != v {
            let cur = *path.last().unwrap();
            let next = g
                .neighbors(cur)
                .find(|&w| dist.at(w, v) + 1 == dist.at(cur, v))
                .unwrap();
            path.push(next);
        }
        let w = path
            .windows(2)
            .take(d - s + 2)
            .map(|e| crate::graph::norm((e[0], e[1])))
            .collect();
        return Ok(ClubDecision::Yes(w));
    }
    if k <= 2 {
        return Ok(brute_force(g, k, s));
    }
    if k == d - s {
        return exact(g, k, s);
    }
    // k = d - s + 1 >= 3.
    if let ClubDecision::Yes(w) = exact(g, k - 1, s)? {
        return Ok(ClubDecision::Yes(w));
    }
    let edges = g.edges();
    let singles = edges.iter().map(|&e| vec![e]);
    let pairs = edges.iter().tuple_combinations().map(|(&e, &f)| vec![e, f]);
    for sp in singles.chain(pairs) {
        let (block_of, blocks) = g.contraction_classes(&sp)?;
        let h = g.quotient(&block_of, blocks);
        if h.diameter() != Some(d + 1 - sp.len()) {
            continue;
        }
        let sub = if is_at_free(&h).is_ok() {
            decide(&h, k - sp.len(), s, d + 1 - sp.len())?
        } else {
            debug_assert!(false, "contraction of an AT-free graph lost AT-freeness");
            brute_force(&h, k - sp.len(), s)
        };
        if let ClubDecision::Yes(w) = sub {
            let mut all = sp.clone();
            all.extend(lift(g, &block_of, &w));
            return Ok(ClubDecision::Yes(all));
        }
    }
    Ok(ClubDecision::No)
}

/// `k = d - s >= 3`: satisfying paths decide the instance.
fn exact(g: &Graph, k: usize, s: usize) -> Result<ClubDecision> {
    let (u, v) = diameter_dominating_pair(g)?;
    let prof = distance_profile(g, u, v)?;
    let found = find_satisfying_path(g, &prof, k);
    if let Some(q) = &found.free {
        return Ok(ClubDecision::Yes(path_edges(q)));
    }
    for (q, from) in [(&found.from_u, u), (&found.to_v, v)] {
        if q.is_none() {
            continue;
        }
        let Some(layers) = unique_layers(&prof, from, k - 2) else {
            continue;
        };
        let forced = path_edges(&layers);
        for (e, f) in g
            .edges()
            .into_iter()
            .filter(|e| !forced.contains(e))
            .tuple_combinations()
        {
            let mut w = forced.clone();
            w.extend([e, f]);
            if g.contract_edges(&w)?.diameter().is_some_and(|dd| dd <= s) {
                w.sort_unstable();
                return Ok(ClubDecision::Yes(w));
            }
        }
    }
    Ok(ClubDecision::No)
}

/// The vertices at distance `0..=depth` from `from`, if each distance is attained exactly once.
fn unique_layers(p: &DistanceProfile, from: Vertex, depth: usize) -> Option<Vec<Vertex>> {
    let n = p.dist.n();
    (0..=depth)
        .map(|i| (0..n).filter(|&x| p.dist(from, x) == i).exactly_one().ok())
        .collect()
}

fn path_edges(q: &[Vertex]) -> Vec<Edge> {
    q.windows(2)
        .map(|e| crate::graph::norm((e[0], e[1])))
        .sorted()
        .collect()
}

/// Maps edges of a quotient back to edges of `g` (smallest representative per block pair).
fn lift(g: &Graph, block_of: &[usize], quotient_edges: &[Edge]) -> Vec<Edge> {
    quotient_edges
        .iter()
        .map(|&(a, b)| {
            g.edges()
                .into_iter()
                .find(|&(x, y)| {
                    let (bx, by) = (block_of[x], block_of[y]);
                    (bx, by) == (a, b) || (bx, by) == (b, a)
                })
                .expect("quotient edge has a preimage")
        })
        .collect()
}

/// Tries every set of at most `k` edges, smallest first.
fn brute_force(g: &Graph, k: usize, s: usize) -> ClubDecision {
    let edges = g.edges();
    for size in 0..=k.min(edges.len()) {
        for w in edges.iter().copied().combinations(size) {
            if g.contract_edges(&w)
                .ok()
                .and_then(|h| h.diameter())
                .is_some_and(|d| d <= s)
            {
                return ClubDecision::Yes(w);
            }
        }
    }
    ClubDecision::No
}

/// Minimum number of contractions reaching diameter `s`, with a witness.
pub fn min_club_contraction_atfree(g: &Graph, s: usize) -> Result<(usize, Vec<Edge>)> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let d = g.diameter().expect("connected");
    let lo = d.saturating_sub(s);
    for k in lo..lo + 2 {
        if let ClubDecision::Yes(w) = s_club_contract_decide(g, k, s)? {
            return Ok((w.len(), w));
        }
    }
    match s_club_contract_decide(g, lo + 2, s)? {
        ClubDecision::Yes(w) => Ok((w.len(), w)),
        ClubDecision::No => Err(Error::InvalidStructure("upper bound d - s + 2 failed".into())),
    }
}

/// Largest `p` such that `g` contracts to a `p`-vertex graph of diameter at most `s`.
pub fn max_s_club_minor_atfree(g: &Graph, s: usize) -> Result<usize> {
    Ok(g.n() - min_club_contraction_atfree(g, s)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profiles() {
        let p = distance_profile(&Graph::path(5), 0, 4).unwrap();
        assert_eq!(
            (p.x_u.clone(), p.y_u.clone(), p.x_v.clone(), p.y_v.clone()),
            (vec![4], vec![3], vec![0], vec![1])
        );
        let c = distance_profile(&Graph::cycle(6), 0, 3).unwrap();
        assert_eq!(c.y_u, vec![2, 4]);
        let k = distance_profile(&Graph::complete(4), 0, 1).unwrap();
        assert_eq!(k.x_u, vec![1, 2, 3]);
        assert!(distance_profile(&Graph::path(5), 0, 3).is_err());
    }

    #[test]
    fn path_conditions() {
        let g = Graph::path(8);
        let p = distance_profile(&g, 0, 7).unwrap();
        assert!(is_satisfying_path(&g, &p, &[2, 3, 4]).unwrap());
        assert!(!is_satisfying_path(&g, &p, &[4, 3, 2]).unwrap());
        assert!(is_satisfying_path(&g, &p, &[0, 2]).is_err());
    }

    #[test]
    fn pinned_and_free_searches() {
        let g = Graph::path(10);
        let p = distance_profile(&g, 0, 9).unwrap();
        let r = find_satisfying_path(&g, &p, 7);
        assert!(r.free.is_some());
        let g = Graph::path(12);
        let p = distance_profile(&g, 0, 11).unwrap();
        let r = find_satisfying_path(&g, &p, 9);
        assert_eq!(r.free, Some((1..=10).collect()));
        assert!(!r.pinned());
    }

    #[test]
    fn decisions() {
        let p7 = Graph::path(7);
        assert!(s_club_contract_decide(&p7, 3, 3).unwrap().is_yes());
        assert_eq!(s_club_contract_decide(&p7, 2, 3).unwrap(), ClubDecision::No);
        assert!(s_club_contract_decide(&Graph::cycle(6), 1, 2).is_err());
        assert!(s_club_contract_decide(&Graph::cycle(5), 0, 2).unwrap().is_yes());
        assert_eq!(
            s_club_contract_decide(&Graph::new(2), 5, 2).unwrap(),
            ClubDecision::No
        );
        assert!(matches!(
            s_club_contract_decide(&p7, 3, 1),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn path_minimums() {
        for n in 4..20 {
            for s in 2..n - 1 {
                assert_eq!(
                    min_club_contraction_atfree(&Graph::path(n), s).unwrap().0,
                    n - 1 - s
                );
            }
        }
        assert_eq!(max_s_club_minor_atfree(&Graph::path(5), 2).unwrap(), 3);
    }
}
