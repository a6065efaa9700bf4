//! Maximum clique-matching and Hadwiger number of bipartite permutation graphs.
//!
//! Positions of `V2` are 1-based after the anchor `v` is renamed to 1; an interval `[lo, hi]`
//! with `lo > hi` is empty.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};
use crate::oracle::is_clique_matching;
use crate::recognition::{strong_ordering, verify_ordering, StrongOrdering};

const NEG: i64 = i64::MIN / 4;

/// Maximum clique-matching, using an ordering computed by [`strong_ordering`].
pub fn max_clique_matching(g: &Graph) -> Result<(usize, Vec<Edge>)> {
    let ord = strong_ordering(g).ok_or(Error::NotBipartitePermutation)?;
    max_clique_matching_with(g, &ord)
}

/// Maximum clique-matching for a caller-supplied ordering, which is checked first.
pub fn max_clique_matching_with(g: &Graph, ord: &StrongOrdering) -> Result<(usize, Vec<Edge>)> {
    if !verify_ordering(g, ord)? {
        return Err(Error::domain(
            "ordering lacks the adjacency or enclosure property",
        ));
    }
    let ctx = Context::new(g, ord);
    let mut best: (usize, Vec<Edge>) = (0, Vec::new());
    for (a, b) in g.edges() {
        let (u, v) = if ord.side[a] == 0 { (a, b) } else { (b, a) };
        let mut inst = ctx.anchor(u, v);
        let value = inst.solve();
        if value > best.0 {
            let m = inst.matching();
            debug_assert_eq!(m.len(), value);
            best = (value, m);
        }
    }
    for e in &mut best.1 {
        *e = crate::graph::norm(*e);
    }
    best.1.sort_unstable();
    if !is_clique_matching(g, &best.1) {
        return Err(Error::InvalidStructure(format!(
            "reconstructed matching {:?} is not a clique-matching",
            best.1
        )));
    }
    Ok(best)
}

/// Neighbourhood intervals of `V1` over the positions of `V2` (0-based here).
struct Context {
    order: Vec<Vertex>,
    v1: Vec<Vertex>,
    interval: Vec<Option<(usize, usize)>>,
    pos: Vec<usize>,
}

impl Context {
    fn new(g: &Graph, ord: &StrongOrdering) -> Self {
        let pos = ord.positions();
        let interval = (0..g.n())
            .map(|w| {
                if ord.side[w] != 0 {
                    return None;
                }
                let ps = g.neighbors(w).map(|x| pos[x]);
                let (lo, hi) = ps.fold((usize::MAX, 0), |(lo, hi), p| (lo.min(p), hi.max(p)));
                (lo != usize::MAX).then_some((lo, hi))
            })
            .collect();
        Context {
            order: ord.order.clone(),
            v1: ord.v1(),
            interval,
            pos,
        }
    }

    /// Trimmed 1-based interval of `w` once positions before `start` are deleted.
    fn trimmed(&self, w: Vertex, start: usize) -> Option<(usize, usize)> {
        let (lo, hi) = self.interval[w]?;
        (hi >= start).then(|| (lo.max(start) - start + 1, hi - start + 1))
    }

    fn anchor(&self, u: Vertex, v: Vertex) -> Anchored<'_> {
        let start = self.pos[v];
        let r = self.trimmed(u, start).expect("anchor edge").1;
        let mut cands: Vec<(usize, Vertex)> = Vec::new();
        let mut xs: Vec<(usize, Vertex)> = Vec::new();
        let mut ys: Vec<(usize, Vertex)> = Vec::new();
        for &w in &self.v1 {
            if w == u {
                continue;
            }
            let Some((lo, hi)) = self.trimmed(w, start) else {
                continue;
            };
            if lo == 1 && hi > r {
                cands.push((hi, w));
            } else if lo == 1 && hi >= 2 {
                xs.push((hi, w));
            } else if lo > 1 && lo <= r && hi >= r {
                ys.push((lo, w));
            }
        }
        cands.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let mut forced = Vec::new();
        let mut prev = usize::MAX;
        for &(hi, w) in &cands {
            let j = hi.min(prev.saturating_sub(1));
            if j > r {
                forced.push((w, j));
                prev = j;
            } else {
                // Unselected candidates keep `[1, r]` and behave as x-vertices.
                xs.push((r, w));
            }
        }
        xs.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        ys.sort();
        let mut rx = vec![r];
        rx.extend(xs.iter().map(|&(hi, _)| hi.min(r)));
        let mut ly = vec![1];
        ly.extend(ys.iter().map(|&(lo, _)| lo));
        Anchored {
            u,
            start,
            order: &self.order,
            forced,
            x: std::iter::once(u).chain(xs.iter().map(|&(_, w)| w)).collect(),
            y: std::iter::once(u).chain(ys.iter().map(|&(_, w)| w)).collect(),
            rx,
            ly,
            table: Vec::new(),
        }
    }
}

/// One anchored instance: `x[0] = y[0] = u`, `rx[i]` is the right end of `N(x_i)` (whose left
/// end is 1) and `ly[j]` the left end of `N(y_j)` (whose right end is `r = rx[0]`).
struct Anchored<'a> {
    u: Vertex,
    start: usize,
    order: &'a [Vertex],
    forced: Vec<(Vertex, usize)>,
    x: Vec<Vertex>,
    y: Vec<Vertex>,
    rx: Vec<usize>,
    ly: Vec<usize>,
    /// `table[i][j][l]` for `l` up to the length of `I(i, j)`.
    table: Vec<Vec<Vec<i64>>>,
}

/// A partial matching as (V1 vertex, position) pairs.
type Pairs = Vec<(Vertex, usize)>;

impl Anchored<'_> {
    fn s(&self) -> usize {
        self.x.len() - 1
    }

    fn t(&self) -> usize {
        self.y.len() - 1
    }

    fn bounds(&self, i: usize, j: usize) -> (usize, usize) {
        (self.ly[j], self.rx[i])
    }

    fn len(&self, i: usize, j: usize) -> usize {
        (self.rx[i] + 1).saturating_sub(self.ly[j])
    }

    fn get(&self, i: usize, j: usize, l: i64) -> i64 {
        if l < 0 {
            return NEG;
        }
        let row = &self.table[i][j];
        row[(l as usize).min(row.len() - 1)]
    }

    fn solve(&mut self) -> usize {
        let (s, t) = (self.s(), self.t());
        self.table = vec![vec![Vec::new(); t + 1]; s + 1];
        for i in 0..=s {
            for j in 0..=t {
                let row: Vec<i64> = (0..=self.len(i, j) as i64).map(|l| self.cell(i, j, l)).collect();
                debug_assert!(row.windows(2).all(|w| w[0] <= w[1]), "c({i},{j},.) not monotone");
                self.table[i][j] = row;
            }
        }
        let top = self.get(s, t, self.len(s, t) as i64);
        debug_assert!(top >= 1);
        self.forced.len() + top as usize
    }

    fn cell(&self, i: usize, j: usize, l: i64) -> i64 {
        match (i, j) {
            (0, 0) => {
                if l >= 1 {
                    1
                } else {
                    NEG
                }
            }
            (_, 0) => {
                if l < 1 {
                    return NEG;
                }
                let (out, inside) = split_count(&self.x_greedy(i), |p| p > self.rx[i]);
                1 + out as i64 + (inside as i64).min(l - 1)
            }
            (0, _) => {
                let (out, inside) = split_count(&self.y_greedy(j), |p| p < self.ly[j]);
                1 + out as i64 + (inside as i64).min(l)
            }
            _ => self
                .options(i, j, l)
                .into_iter()
                .map(|o| o.value)
                .max()
                .unwrap_or(NEG),
        }
    }

    /// Rightmost-first picks for `x_1..x_i` within `[2, rx]`.
    fn x_greedy(&self, i: usize) -> Vec<usize> {
        let mut picks = Vec::new();
        let mut prev = usize::MAX;
        for f in 1..=i {
            let p = self.rx[f].min(prev - 1);
            if p < 2 {
                break;
            }
            picks.push(p);
            prev = p;
        }
        picks
    }

    /// Leftmost-first picks for `y_1..y_j` within `[ly, r]`.
    fn y_greedy(&self, j: usize) -> Vec<usize> {
        let r = self.rx[0];
        let mut picks = Vec::new();
        let mut prev = 1;
        for f in 1..=j {
            let p = self.ly[f].max(prev + 1);
            if p > r {
                break;
            }
            picks.push(p);
            prev = p;
        }
        picks
    }

    /// Leftmost picks for `y_{j'+1}..y_j` in `(p, rx[i]]`, at most `l` of them inside `I(i, j)`.
    fn g_greedy(&self, i: usize, j: usize, jp: usize, p: usize, l: i64) -> Vec<usize> {
        let mut picks = Vec::new();
        let mut prev = p;
        let mut inside = 0;
        for f in jp + 1..=j {
            let g = self.ly[f].max(prev + 1);
            if g > self.rx[i] {
                break;
            }
            if g >= self.ly[j] {
                if inside >= l {
                    break;
                }
                inside += 1;
            }
            picks.push(g);
            prev = g;
        }
        picks
    }

    fn options(&self, i: usize, j: usize, l: i64) -> Vec<Choice> {
        let extra = self.len(i - 1, j) as i64 - self.len(i, j) as i64;
        let mut out = vec![Choice {
            value: self.get(i - 1, j, l + extra),
            kind: Kind::Skip,
        }];
        if l >= 1 && self.len(i, j) >= 1 {
            out.push(Choice {
                value: 1 + self.get(i - 1, j, l - 1 + extra),
                kind: Kind::Inside,
            });
        }
        for p in 2..=self.rx[i].min(self.ly[j] - 1) {
            let jp = (0..=j).rev().find(|&f| self.ly[f] <= p).unwrap_or(0);
            let g = self.g_greedy(i, j, jp, p, l);
            let q = g.len() as i64;
            let lp = self.len(i - 1, jp) as i64 - self.len(i, j) as i64 + l - (q + 1);
            out.push(Choice {
                value: 1 + q + self.get(i - 1, jp, lp),
                kind: Kind::Before { p, jp, g },
            });
        }
        out
    }

    fn matching(&self) -> Vec<Edge> {
        let (s, t) = (self.s(), self.t());
        let mut pairs = self.rebuild(s, t, self.len(s, t) as i64);
        let r = self.rx[0];
        pairs.extend(self.forced.iter().copied());
        debug_assert!(
            pairs.iter().all(|&(_, p)| p >= 1)
                && pairs.iter().filter(|&&(_, p)| p > r).count() == self.forced.len()
        );
        pairs
            .into_iter()
            .map(|(w, p)| (w, self.order[self.start + p - 1]))
            .collect()
    }

    /// A matching attaining `c(i, j, l)` that saturates at most `l` positions of `I(i, j)`.
    fn rebuild(&self, i: usize, j: usize, l: i64) -> Pairs {
        let l = l.min(self.len(i, j) as i64);
        match (i, j) {
            (0, 0) => vec![(self.u, 1)],
            (_, 0) => {
                let picks = self.x_greedy(i);
                let (out, _) = split_count(&picks, |p| p > self.rx[i]);
                let keep = out + (l as usize - 1).min(picks.len() - out);
                let mut m = vec![(self.u, 1)];
                m.extend(
                    picks
                        .iter()
                        .take(keep)
                        .enumerate()
                        .map(|(f, &p)| (self.x[f + 1], p)),
                );
                m
            }
            (0, _) => {
                let picks = self.y_greedy(j);
                let (out, _) = split_count(&picks, |p| p < self.ly[j]);
                let keep = out + (l as usize).min(picks.len() - out);
                let mut m = vec![(self.u, 1)];
                m.extend(
                    picks
                        .iter()
                        .take(keep)
                        .enumerate()
                        .map(|(f, &p)| (self.y[f + 1], p)),
                );
                m
            }
            _ => {
                let target = self.get(i, j, l);
                let choice = self
                    .options(i, j, l)
                    .into_iter()
                    .find(|c| c.value == target)
                    .expect("some option attains the cell value");
                let extra = self.len(i - 1, j) as i64 - self.len(i, j) as i64;
                let inner = self.bounds(i, j);
                match choice.kind {
                    Kind::Skip => {
                        let mut m = self.rebuild(i - 1, j, l + extra);
                        relocate(&mut m, self.bounds(i - 1, j), inner, l, &[]);
                        m
                    }
                    Kind::Inside => {
                        let mut m = self.rebuild(i - 1, j, l - 1 + extra);
                        relocate(&mut m, self.bounds(i - 1, j), inner, l - 1, &[]);
                        let p = (inner.0..=inner.1)
                            .find(|&p| m.iter().all(|&(_, q)| q != p))
                            .expect("a free position inside the interval");
                        m.push((self.x[i], p));
                        m
                    }
                    Kind::Before { p, jp, g } => {
                        let q = g.len() as i64;
                        let lp = self.len(i - 1, jp) as i64 - self.len(i, j) as i64 + l - (q + 1);
                        let mut m = self.rebuild(i - 1, jp, lp);
                        let g_in = g.iter().filter(|&&x| x >= inner.0).count() as i64;
                        let mut taken = g.clone();
                        taken.push(p);
                        relocate(&mut m, self.bounds(i - 1, jp), inner, l - g_in, &taken);
                        m.push((self.x[i], p));
                        m.extend(g.iter().enumerate().map(|(f, &x)| (self.y[jp + 1 + f], x)));
                        m
                    }
                }
            }
        }
    }
}

struct Choice {
    value: i64,
    kind: Kind,
}

enum Kind {
    Skip,
    Inside,
    Before { p: usize, jp: usize, g: Vec<usize> },
}

fn split_count(picks: &[usize], outside: impl Fn(usize) -> bool) -> (usize, usize) {
    let out = picks.iter().filter(|&&p| outside(p)).count();
    (out, picks.len() - out)
}

/// Moves the partners of `m` lying in `outer` (except position 1, which belongs to the anchor)
/// so that they avoid `taken` and at most `budget` of them fall in `inner`. All vertices of
/// `outer` have the same neighbours among the matched vertices, so the result is still a
/// clique-matching.
fn relocate(m: &mut Pairs, outer: (usize, usize), inner: (usize, usize), budget: i64, taken: &[usize]) {
    let movable: Vec<usize> = (0..m.len())
        .filter(|&e| m[e].1 != 1 && m[e].1 >= outer.0 && m[e].1 <= outer.1)
        .collect();
    let fixed_here = m.iter().any(|&(_, p)| p == 1 && outer.0 == 1);
    let free = |p: usize| !taken.contains(&p) && !(fixed_here && p == 1);
    let in_inner = |p: usize| p >= inner.0 && p <= inner.1;
    let slots: Vec<usize> = (outer.0..=outer.1)
        .filter(|&p| free(p) && !in_inner(p))
        .chain(
            (outer.0..=outer.1)
                .filter(|&p| free(p) && in_inner(p))
                .take(budget.max(0) as usize),
        )
        .collect();
    assert!(
        slots.len() >= movable.len(),
        "interval budget exceeded during reconstruction"
    );
    for (&e, &p) in movable.iter().zip(&slots) {
        m[e].1 = p;
    }
}

/// Hadwiger number of a bipartite permutation graph with a witness of edge-bags and at most two
/// singletons.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BippermHadwiger {
    pub h: usize,
    /// Number of singleton bags in the witness (0, 1 or 2).
    pub singletons: usize,
    pub bags: Vec<Vec<Vertex>>,
}

pub fn hadwiger_bipperm(g: &Graph) -> Result<BippermHadwiger> {
    let ord = strong_ordering(g).ok_or(Error::NotBipartitePermutation)?;
    let mut best = BippermHadwiger {
        h: 0,
        singletons: 0,
        bags: Vec::new(),
    };
    for comp in g.components() {
        let cand = component_hadwiger(g, &ord, &comp)?;
        if cand.h > best.h {
            best = cand;
        }
    }
    Ok(best)
}

fn component_hadwiger(g: &Graph, ord: &StrongOrdering, comp: &[Vertex]) -> Result<BippermHadwiger> {
    if comp.len() == 1 {
        return Ok(BippermHadwiger {
            h: 1,
            singletons: 1,
            bags: vec![vec![comp[0]]],
        });
    }
    let mut best: Option<BippermHadwiger> = None;
    let mut consider = |singles: Vec<Vertex>, verts: Vec<Vertex>| -> Result<()> {
        let (size, m) = sub_matching(g, ord, &verts)?;
        let h = singles.len() + size;
        if best.as_ref().is_none_or(|b| h > b.h) {
            let mut bags: Vec<Vec<Vertex>> = m.into_iter().map(|(a, b)| vec![a, b]).collect();
            bags.extend(singles.iter().map(|&s| vec![s]));
            best = Some(BippermHadwiger {
                h,
                singletons: singles.len(),
                bags,
            });
        }
        Ok(())
    };
    consider(Vec::new(), comp.to_vec())?;
    for &u in comp {
        let verts: Vec<Vertex> = comp
            .iter()
            .copied()
            .filter(|&w| w != u && (ord.side[w] == ord.side[u] || g.has_edge(u, w)))
            .collect();
        consider(vec![u], verts)?;
    }
    for &a in comp {
        for b in g.neighbors(a).filter(|&b| b > a) {
            let verts: Vec<Vertex> = comp
                .iter()
                .copied()
                .filter(|&w| w != a && w != b && (g.has_edge(a, w) || g.has_edge(b, w)))
                .collect();
            consider(vec![a, b], verts)?;
        }
    }
    Ok(best.expect("at least one case evaluated"))
}

/// Maximum clique-matching of `g[verts]` under the inherited ordering, in labels of `g`.
fn sub_matching(g: &Graph, ord: &StrongOrdering, verts: &[Vertex]) -> Result<(usize, Vec<Edge>)> {
    let sub = g.induced_subgraph(verts)?;
    let (size, m) = max_clique_matching_with(&sub, &ord.restrict(verts))?;
    Ok((
        size,
        m.into_iter()
            .map(|(a, b)| crate::graph::norm((verts[a], verts[b])))
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{clique_matching_oracle, hadwiger_oracle};

    #[test]
    fn small_matchings() {
        assert_eq!(max_clique_matching(&Graph::path(4)).unwrap().0, 2);
        assert_eq!(
            max_clique_matching(&Graph::complete_bipartite(1, 3)).unwrap().0,
            1
        );
        assert_eq!(
            max_clique_matching(&Graph::complete_bipartite(3, 3)).unwrap().0,
            3
        );
        assert_eq!(max_clique_matching(&Graph::new(3)).unwrap().0, 0);
        assert!(matches!(
            max_clique_matching(&Graph::cycle(6)),
            Err(Error::NotBipartitePermutation)
        ));
    }

    #[test]
    fn paths_and_ladders_match_oracle() {
        for n in 2..12 {
            let g = Graph::path(n);
            assert_eq!(
                max_clique_matching(&g).unwrap().0,
                clique_matching_oracle(&g).unwrap().0,
                "P{n}"
            );
        }
        for a in 1..5 {
            for b in 1..5 {
                let g = Graph::complete_bipartite(a, b);
                assert_eq!(max_clique_matching(&g).unwrap().0, a.min(b));
            }
        }
    }

    #[test]
    fn hadwiger_examples() {
        assert_eq!(hadwiger_bipperm(&Graph::path(6)).unwrap().h, 2);
        assert_eq!(hadwiger_bipperm(&Graph::complete_bipartite(3, 3)).unwrap().h, 4);
        assert_eq!(hadwiger_bipperm(&Graph::cycle(4)).unwrap().h, 3);
        assert_eq!(hadwiger_bipperm(&Graph::new(2)).unwrap().h, 1);
        assert_eq!(hadwiger_bipperm(&Graph::new(0)).unwrap().h, 0);
        let k33 = Graph::complete_bipartite(3, 3);
        assert_eq!(
            hadwiger_bipperm(&k33).unwrap().h,
            hadwiger_oracle(&k33).unwrap().value
        );
    }

    #[test]
    fn bad_ordering_rejected() {
        let g = Graph::path(5);
        let ord = StrongOrdering {
            side: vec![1, 0, 1, 0, 1],
            order: vec![0, 4, 2],
        };
        assert!(max_clique_matching_with(&g, &ord).is_err());
    }
}
