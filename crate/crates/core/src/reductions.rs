//! Hardness constructions, their source-problem solvers, and two graph transformations.

use std::collections::BTreeMap;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{is_chordal, Graph, Vertex};
use crate::recognition::{is_cobipartite, is_split};
use crate::witness::{WitnessMode, WitnessStructure};

const SOLVER_CAP: usize = 20;

/// 3-CNF formula over variables `1..=vars`; a literal is `+i` or `-i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NaeFormula {
    pub vars: usize,
    pub clauses: Vec<[i32; 3]>,
}

impl NaeFormula {
    pub fn new(vars: usize, clauses: Vec<[i32; 3]>) -> Result<Self> {
        for c in &clauses {
            for &lit in c {
                if lit == 0 || lit.unsigned_abs() as usize > vars {
                    return Err(Error::domain(format!("literal {lit} out of range 1..={vars}")));
                }
            }
        }
        Ok(NaeFormula { vars, clauses })
    }

    /// Whether `assignment` (indexed by variable - 1) gives every clause a true and a false literal.
    pub fn nae_satisfied(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            let vals = c.map(|lit| assignment[lit.unsigned_abs() as usize - 1] == (lit > 0));
            vals.contains(&true) && vals.contains(&false)
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HittingSetInstance {
    pub universe: usize,
    pub sets: Vec<Vec<usize>>,
    pub k: usize,
}

impl HittingSetInstance {
    pub fn new(universe: usize, sets: Vec<Vec<usize>>, k: usize) -> Result<Self> {
        let mut clean = Vec::with_capacity(sets.len());
        for (j, s) in sets.into_iter().enumerate() {
            if s.is_empty() {
                return Err(Error::domain(format!("set {j} is empty")));
            }
            if let Some(&u) = s.iter().find(|&&u| u >= universe) {
                return Err(Error::domain(format!(
                    "set {j} has member {u} outside 0..{universe}"
                )));
            }
            clean.push(s.into_iter().sorted_unstable().dedup().collect());
        }
        Ok(HittingSetInstance {
            universe,
            sets: clean,
            k,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionInstance {
    #[serde(skip)]
    pub graph: Graph,
    pub k: usize,
    pub target: String,
    #[serde(rename = "role_labels")]
    pub roles: BTreeMap<String, Vec<Vertex>>,
}

fn clique(g: &mut Graph, vs: &[Vertex]) {
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            g.add_edge(a, b);
        }
    }
}

/// Literal vertices sit at `2i` (positive) and `2i + 1` (negative) for variable `i + 1`.
pub fn literal_vertex(lit: i32) -> Vertex {
    let i = lit.unsigned_abs() as usize - 1;
    if lit > 0 {
        2 * i
    } else {
        2 * i + 1
    }
}

/// Co-bipartite graph that contracts to `K_{N+2}` with `2n - 2` edges iff the formula is
/// NAE-satisfiable.
pub fn nae3sat_to_cobipartite(phi: &NaeFormula) -> Result<ReductionInstance> {
    let n = phi.vars;
    if n == 0 {
        return Err(Error::domain("formula needs at least one variable"));
    }
    let copies = 4 * n - 3;
    let m = phi.clauses.len();
    let big = copies * (n + m);
    let mut g = Graph::new(2 * n + big);
    let mut roles = BTreeMap::new();
    let x: Vec<Vertex> = (0..2 * n).collect();
    clique(&mut g, &x);
    let rest: Vec<Vertex> = (2 * n..2 * n + big).collect();
    clique(&mut g, &rest);
    roles.insert("x".into(), (0..n).map(|i| 2 * i).collect());
    roles.insert("x_bar".into(), (0..n).map(|i| 2 * i + 1).collect());
    for (j, c) in phi.clauses.iter().enumerate() {
        let base = 2 * n + j * copies;
        let vs: Vec<Vertex> = (base..base + copies).collect();
        for &v in &vs {
            for &lit in c {
                g.add_edge(v, literal_vertex(lit));
            }
        }
        roles.insert(format!("clause/{j}"), vs);
    }
    for i in 0..n {
        let base = 2 * n + m * copies + i * copies;
        let vs: Vec<Vertex> = (base..base + copies).collect();
        for &v in &vs {
            g.add_edge(v, 2 * i);
            g.add_edge(v, 2 * i + 1);
        }
        roles.insert(format!("dummy/{i}"), vs);
    }
    debug_assert!(is_cobipartite(&g));
    Ok(ReductionInstance {
        graph: g,
        k: 2 * n - 2,
        target: format!("contraction to K_{}", big + 2),
        roles,
    })
}

/// Bags of the contraction to a complete graph built from an NAE assignment: the false literals
/// form one bag, the true literals another, every other vertex is a singleton.
pub fn nae_witness(inst: &ReductionInstance, assignment: &[bool]) -> WitnessStructure {
    let n = assignment.len();
    let mut falses = Vec::new();
    let mut trues = Vec::new();
    for (i, &val) in assignment.iter().enumerate() {
        let (t, f) = if val {
            (2 * i, 2 * i + 1)
        } else {
            (2 * i + 1, 2 * i)
        };
        trues.push(t);
        falses.push(f);
    }
    let mut bags = vec![falses, trues];
    bags.extend((2 * n..inst.graph.n()).map(|v| vec![v]));
    WitnessStructure::new(bags, WitnessMode::Contraction)
}

struct SplitLayout {
    graph: Graph,
    roles: BTreeMap<String, Vec<Vertex>>,
    x: Vertex,
}

fn split_core(inst: &HittingSetInstance, extra: usize) -> SplitLayout {
    let u = inst.universe;
    let reps = 2 * inst.k + 1;
    let m = inst.sets.len();
    let x = u + m * reps;
    let mut g = Graph::new(x + 1 + extra);
    let mut roles = BTreeMap::new();
    let core: Vec<Vertex> = (0..u).chain([x]).collect();
    clique(&mut g, &core);
    roles.insert("universe".into(), (0..u).collect());
    for (j, s) in inst.sets.iter().enumerate() {
        let vs: Vec<Vertex> = (u + j * reps..u + (j + 1) * reps).collect();
        for &v in &vs {
            for &member in s {
                g.add_edge(v, member);
            }
        }
        roles.insert(format!("set/{j}"), vs);
    }
    roles.insert("x".into(), vec![x]);
    SplitLayout { graph: g, roles, x }
}

/// Split graph that contracts to diameter at most 2 with `k` edges iff a hitting set of size
/// `k` exists.
pub fn hitting_set_to_split(inst: &HittingSetInstance) -> ReductionInstance {
    let reps = 2 * inst.k + 1;
    let SplitLayout {
        mut graph,
        mut roles,
        x,
    } = split_core(inst, reps);
    let ys: Vec<Vertex> = (x + 1..x + 1 + reps).collect();
    for &y in &ys {
        graph.add_edge(x, y);
    }
    roles.insert("y".into(), ys);
    debug_assert!(is_split(&graph));
    ReductionInstance {
        graph,
        k: inst.k,
        target: "diameter <= 2".into(),
        roles,
    }
}

/// Chordal variant for diameter at most 3: `x` and `z_1..z_{2k+1}` form a clique and `y_i` hangs
/// off `z_i`.
pub fn hitting_set_to_chordal(inst: &HittingSetInstance) -> ReductionInstance {
    let reps = 2 * inst.k + 1;
    let SplitLayout {
        mut graph,
        mut roles,
        x,
    } = split_core(inst, 2 * reps);
    let zs: Vec<Vertex> = (x + 1..x + 1 + reps).collect();
    let ys: Vec<Vertex> = (x + 1 + reps..x + 1 + 2 * reps).collect();
    let zx: Vec<Vertex> = zs.iter().copied().chain([x]).collect();
    clique(&mut graph, &zx);
    for (&z, &y) in zs.iter().zip(&ys) {
        graph.add_edge(z, y);
    }
    roles.insert("z".into(), zs);
    roles.insert("y".into(), ys);
    debug_assert!(is_chordal(&graph));
    ReductionInstance {
        graph,
        k: inst.k,
        target: "diameter <= 3".into(),
        roles,
    }
}

/// Edges contracting the chosen universe members into `x`, for the yes direction.
pub fn hitting_set_witness_edges(inst: &ReductionInstance, hitting: &[usize]) -> Vec<(Vertex, Vertex)> {
    let x = inst.roles["x"][0];
    hitting.iter().map(|&u| (u, x)).collect()
}

/// Adds `k + 1` pendants to every vertex; the `t`-th pendant of `v` is `n + v (k + 1) + t`.
pub fn pendant_lift(g: &Graph, k: usize) -> Graph {
    let n = g.n();
    let mut h = Graph::new(n * (k + 2));
    for (a, b) in g.edges() {
        h.add_edge(a, b);
    }
    for v in 0..n {
        for t in 0..=k {
            h.add_edge(v, n + v * (k + 1) + t);
        }
    }
    h
}

/// Replaces the `i`-th edge (in sorted order) by a path through the new vertex `n + i`.
pub fn subdivide_edges(g: &Graph) -> Graph {
    let n = g.n();
    let edges = g.edges();
    let mut h = Graph::new(n + edges.len());
    for (i, (a, b)) in edges.into_iter().enumerate() {
        h.add_edge(a, n + i);
        h.add_edge(b, n + i);
    }
    h
}

pub fn nae3sat_solve(phi: &NaeFormula) -> Result<Option<Vec<bool>>> {
    if phi.vars > SOLVER_CAP {
        return Err(Error::capacity("variable count", phi.vars, SOLVER_CAP));
    }
    for mask in 0u32..1 << phi.vars {
        let a: Vec<bool> = (0..phi.vars).map(|i| mask >> i & 1 == 1).collect();
        if phi.nae_satisfied(&a) {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

/// Smallest hitting set of size at most `k`, or `None`.
pub fn hitting_set_solve(inst: &HittingSetInstance) -> Result<Option<Vec<usize>>> {
    if inst.universe > SOLVER_CAP {
        return Err(Error::capacity("universe size", inst.universe, SOLVER_CAP));
    }
    let masks: Vec<u32> = inst
        .sets
        .iter()
        .map(|s| s.iter().fold(0, |acc, &u| acc | 1 << u))
        .collect();
    for size in 0..=inst.k.min(inst.universe) {
        for pick in (0..inst.universe).combinations(size) {
            let chosen = pick.iter().fold(0u32, |acc, &u| acc | 1 << u);
            if masks.iter().all(|&s| s & chosen != 0) {
                return Ok(Some(pick));
            }
        }
    }
    Ok(None)
}

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

/// DIMACS CNF: `c` comments, a `p cnf V C` header, clauses as literals terminated by `0`.
/// Every clause must have exactly three literals.
pub fn parse_dimacs_cnf(bytes: &[u8]) -> Result<NaeFormula> {
    let text = std::str::from_utf8(bytes).map_err(|e| parse_err(e.valid_up_to(), "invalid UTF-8"))?;
    let mut header = None;
    let mut clauses = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    let mut offset = 0;
    for line in text.split('\n') {
        let start = offset;
        offset += line.len() + 1;
        let t = line.trim();
        if t.is_empty() || t.starts_with('c') || t.starts_with('%') {
            continue;
        }
        if t.starts_with('p') {
            let parts: Vec<&str> = t.split_whitespace().collect();
            if header.is_some() || parts.len() != 4 || parts[1] != "cnf" {
                return Err(parse_err(start, "expected a single `p cnf V C` header"));
            }
            let v = parts[2]
                .parse::<usize>()
                .map_err(|_| parse_err(start, "bad variable count"))?;
            let c = parts[3]
                .parse::<usize>()
                .map_err(|_| parse_err(start, "bad clause count"))?;
            header = Some((v, c));
            continue;
        }
        let Some((vars, _)) = header else {
            return Err(parse_err(start, "clause before the `p cnf` header"));
        };
        for tok in t.split_whitespace() {
            let lit = tok
                .parse::<i32>()
                .map_err(|_| parse_err(start, format!("expected a literal, found `{tok}`")))?;
            if lit == 0 {
                let Ok(c) = <[i32; 3]>::try_from(current.as_slice()) else {
                    return Err(Error::Format(format!(
                        "clause {} has {} literals, expected 3",
                        clauses.len() + 1,
                        current.len()
                    )));
                };
                clauses.push(c);
                current.clear();
            } else if lit.unsigned_abs() as usize > vars {
                return Err(parse_err(
                    start,
                    format!("literal {lit} exceeds variable count {vars}"),
                ));
            } else {
                current.push(lit);
            }
        }
    }
    let Some((vars, count)) = header else {
        return Err(parse_err(0, "missing `p cnf` header"));
    };
    if !current.is_empty() {
        return Err(parse_err(
            offset.min(bytes.len()),
            "last clause is not terminated by 0",
        ));
    }
    if clauses.len() != count {
        return Err(Error::Format(format!(
            "header declares {count} clauses, found {}",
            clauses.len()
        )));
    }
    NaeFormula::new(vars, clauses)
}

pub fn to_dimacs_cnf(phi: &NaeFormula) -> String {
    let mut out = format!("p cnf {} {}\n", phi.vars, phi.clauses.len());
    for c in &phi.clauses {
        out.push_str(&format!("{} {} {} 0\n", c[0], c[1], c[2]));
    }
    out
}

/// Set system: a line `n m`, then `m` lines of 0-based member indices. `#` starts a comment.
pub fn parse_set_system(bytes: &[u8], k: usize) -> Result<HittingSetInstance> {
    let text = std::str::from_utf8(bytes).map_err(|e| parse_err(e.valid_up_to(), "invalid UTF-8"))?;
    let mut lines = Vec::new();
    let mut offset = 0;
    for line in text.split('\n') {
        let start = offset;
        offset += line.len() + 1;
        let t = line.split('#').next().unwrap_or("").trim();
        if !t.is_empty() {
            lines.push((start, t));
        }
    }
    let Some(&(hoff, head)) = lines.first() else {
        return Err(parse_err(0, "missing `n m` header"));
    };
    let nums = |off: usize, s: &str| -> Result<Vec<usize>> {
        s.split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| parse_err(off, format!("expected a non-negative integer, found `{tok}`")))
            })
            .collect()
    };
    let h = nums(hoff, head)?;
    if h.len() != 2 {
        return Err(parse_err(hoff, "header must be `n m`"));
    }
    let (n, m) = (h[0], h[1]);
    if lines.len() - 1 != m {
        return Err(Error::Format(format!(
            "header declares {m} sets, found {}",
            lines.len() - 1
        )));
    }
    let mut sets = Vec::with_capacity(m);
    for &(off, line) in &lines[1..] {
        let s = nums(off, line)?;
        if let Some(&u) = s.iter().find(|&&u| u >= n) {
            return Err(parse_err(off, format!("member {u} outside universe 0..{n}")));
        }
        sets.push(s);
    }
    HittingSetInstance::new(n, sets, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness::verify_witness;

    fn phi(vars: usize, clauses: &[[i32; 3]]) -> NaeFormula {
        NaeFormula::new(vars, clauses.to_vec()).unwrap()
    }

    #[test]
    fn cobipartite_sizes() {
        let r = nae3sat_to_cobipartite(&phi(2, &[[1, -2, 2]])).unwrap();
        assert_eq!((r.graph.n(), r.k), (19, 2));
        assert_eq!(r.target, "contraction to K_17");
        let r = nae3sat_to_cobipartite(&phi(3, &[[1, 2, 3]])).unwrap();
        assert_eq!(r.graph.n(), 42);
        let r = nae3sat_to_cobipartite(&phi(1, &[[1, 1, 1]])).unwrap();
        assert_eq!((r.graph.n(), r.k), (4, 0));
        assert!(is_cobipartite(&r.graph));
        assert!(nae3sat_to_cobipartite(&phi(0, &[])).is_err());
    }

    #[test]
    fn cobipartite_witness() {
        let f = phi(3, &[[1, 2, 3], [-1, 2, -3]]);
        let a = nae3sat_solve(&f).unwrap().unwrap();
        let r = nae3sat_to_cobipartite(&f).unwrap();
        let w = nae_witness(&r, &a);
        let target = Graph::complete(w.len());
        assert_eq!(w.len(), r.graph.n() - r.k);
        assert!(verify_witness(&r.graph, &target, &w).unwrap());
    }

    #[test]
    fn split_sizes() {
        let inst = HittingSetInstance::new(2, vec![vec![0]], 1).unwrap();
        let r = hitting_set_to_split(&inst);
        assert_eq!(r.graph.n(), 9);
        assert!(is_split(&r.graph));
        assert_eq!(r.graph.diameter(), Some(3));
        let r = hitting_set_to_chordal(&inst);
        assert_eq!(r.graph.n(), 12);
        assert!(is_chordal(&r.graph));
        let inst = HittingSetInstance::new(3, vec![vec![0, 1], vec![2]], 0).unwrap();
        assert_eq!(hitting_set_to_split(&inst).graph.n(), 3 + 2 + 1 + 1);
        assert_eq!(hitting_set_to_chordal(&inst).graph.n(), 3 + 2 + 1 + 2);
        let empty = HittingSetInstance::new(2, vec![], 2).unwrap();
        let r = hitting_set_to_split(&empty);
        assert_eq!(r.graph.n(), 2 + 1 + 5);
        assert_eq!(r.graph.diameter(), Some(2));
    }

    #[test]
    fn split_witness_contracts_to_diameter_two() {
        let inst = HittingSetInstance::new(3, vec![vec![0, 1], vec![1, 2]], 1).unwrap();
        let hit = hitting_set_solve(&inst).unwrap().unwrap();
        assert_eq!(hit, vec![1]);
        let r = hitting_set_to_split(&inst);
        let h = r
            .graph
            .contract_edges(&hitting_set_witness_edges(&r, &hit))
            .unwrap();
        assert_eq!(h.diameter(), Some(2));
        let r = hitting_set_to_chordal(&inst);
        let h = r
            .graph
            .contract_edges(&hitting_set_witness_edges(&r, &hit))
            .unwrap();
        assert_eq!(h.diameter(), Some(3));
    }

    #[test]
    fn lift_and_subdivide() {
        let star = pendant_lift(&Graph::new(1), 1);
        assert_eq!(star.edges(), vec![(0, 1), (0, 2)]);
        let p4 = pendant_lift(&Graph::path(2), 0);
        assert_eq!(p4.n(), 4);
        assert_eq!(p4.diameter(), Some(3));
        let c6 = subdivide_edges(&Graph::complete(3));
        assert_eq!((c6.n(), c6.m()), (6, 6));
        assert!(c6.is_bipartite() && c6.is_connected());
        assert!(c6
            .edges()
            .iter()
            .all(|&(a, b)| c6.degree(a) == 2 && c6.degree(b) == 2));
    }

    #[test]
    fn solvers() {
        assert_eq!(nae3sat_solve(&phi(1, &[[1, 1, 1]])).unwrap(), None);
        assert!(nae3sat_solve(&phi(3, &[[1, 2, 3]])).unwrap().is_some());
        let inst = HittingSetInstance::new(2, vec![vec![0], vec![1]], 1).unwrap();
        assert_eq!(hitting_set_solve(&inst).unwrap(), None);
        assert!(matches!(
            nae3sat_solve(&phi(21, &[])),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn cnf_format() {
        let f = parse_dimacs_cnf(b"c demo\np cnf 3 2\n1 -2 3 0\n-1\n2 3 0\n").unwrap();
        assert_eq!(f.clauses, vec![[1, -2, 3], [-1, 2, 3]]);
        assert_eq!(parse_dimacs_cnf(to_dimacs_cnf(&f).as_bytes()).unwrap(), f);
        assert!(matches!(
            parse_dimacs_cnf(b"p cnf 2 1\n1 2 0\n"),
            Err(Error::Format(_))
        ));
        assert!(matches!(
            parse_dimacs_cnf(b"p cnf 2 1\n1 2 4 0\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_dimacs_cnf(b"p cnf 2 2\n1 2 2 0\n"),
            Err(Error::Format(_))
        ));
        assert!(parse_dimacs_cnf(b"1 2 3 0\n").is_err());
    }

    #[test]
    fn set_system_format() {
        let s = parse_set_system(b"3 2\n0 1\n# note\n2\n", 1).unwrap();
        assert_eq!(s.sets, vec![vec![0, 1], vec![2]]);
        assert!(matches!(
            parse_set_system(b"3 2\n0 1\n", 1),
            Err(Error::Format(_))
        ));
        assert!(parse_set_system(b"2 1\n0 2\n", 1).is_err());
        assert!(parse_set_system(b"", 1).is_err());
    }
}
