use std::collections::{BTreeMap, VecDeque};
use std::path::Path;
use std::time::Instant;

use minorkit::bipperm::{hadwiger_bipperm, max_clique_matching};
use minorkit::club::{min_club_contraction_atfree, s_club_contract_decide, ClubDecision};
use minorkit::cograph_dp::hadwiger_cograph;
use minorkit::generate;
use minorkit::graph::{chordality_capped, is_chordal, DEFAULT_CHORDALITY_CAP};
use minorkit::io::emit_graph;
use minorkit::oracle::{
    clique_matching_oracle_with, hadwiger_minor_oracle, hadwiger_oracle_with, is_clique_matching,
    max_s_club_minor_oracle_with, min_club_contraction_oracle_with, nice_structure_oracle_with,
};
use minorkit::recognition::{
    diameter_dominating_pair, is_at_free, is_bipartite_permutation, is_chordal_bipartite, is_cobipartite,
    is_cograph, is_dominating_pair, is_split, recognize_cograph, strong_ordering, verify_cotree,
    verify_ordering,
};
use minorkit::reductions::{
    hitting_set_to_chordal, hitting_set_to_split, nae3sat_to_cobipartite, parse_dimacs_cnf, parse_set_system,
    pendant_lift, subdivide_edges,
};
use minorkit::{verify_witness, Edge, Error, Graph, OracleConfig, Vertex, WitnessMode, WitnessStructure};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::input::{read, read_graph};
use crate::report::{Failure, Report, SCHEMA};
use crate::{Common, Family, Method, OracleKind, Outcome, Output, ReduceKind};

fn config(c: &Common) -> OracleConfig {
    let mut cfg = OracleConfig::default();
    if let Some(cap) = c.cap {
        cfg = cfg.with_cap(cap);
    }
    if let Some(t) = c.threads {
        cfg.threads = t.max(1);
    }
    cfg
}

fn ensure(ok: bool, what: &str) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(Failure::Internal(format!("certificate check failed: {what}")))
    }
}

fn emit(report: Report, c: &Common, start: Instant) -> Outcome {
    report.print(c.json, start.elapsed());
    Ok(())
}

/// Whether `a` reaches `b` without touching the closed neighbourhood of `z`.
fn avoids(g: &Graph, a: Vertex, b: Vertex, z: Vertex) -> bool {
    let blocked = g.closed_neighborhood(z);
    if blocked.contains(a) || blocked.contains(b) {
        return false;
    }
    let mut seen = vec![false; g.n()];
    seen[a] = true;
    let mut queue = VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        if x == b {
            return true;
        }
        for y in g.neighbors(x) {
            if !seen[y] && !blocked.contains(y) {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    false
}

fn is_induced_p4(g: &Graph, p: &[Vertex; 4]) -> bool {
    g.has_edge(p[0], p[1])
        && g.has_edge(p[1], p[2])
        && g.has_edge(p[2], p[3])
        && !g.has_edge(p[0], p[2])
        && !g.has_edge(p[1], p[3])
        && !g.has_edge(p[0], p[3])
}

pub fn recognize(c: &Common) -> Outcome {
    let start = Instant::now();
    let (g, digest) = read_graph(c)?;
    let mut r = Map::new();
    r.insert("n".into(), json!(g.n()));
    r.insert("m".into(), json!(g.m()));
    r.insert("connected".into(), json!(g.is_connected()));
    r.insert("bipartite".into(), json!(g.is_bipartite()));

    let cograph = match recognize_cograph(&g) {
        Ok(t) => {
            if let Some(t) = &t {
                ensure(verify_cotree(&g, t), "cotree")?;
            }
            json!({"member": true, "cotree": t})
        }
        Err(p) => {
            ensure(is_induced_p4(&g, &p), "induced P4")?;
            json!({"member": false, "induced_p4": p})
        }
    };
    r.insert("cograph".into(), cograph);

    let bipperm = match strong_ordering(&g) {
        Some(o) => {
            ensure(verify_ordering(&g, &o)?, "strong ordering")?;
            json!({"member": true, "strong_ordering": o})
        }
        None => json!({"member": false}),
    };
    r.insert("bipartite_permutation".into(), bipperm);

    let at_free = match is_at_free(&g) {
        Ok(()) if g.n() > 0 && g.is_connected() => {
            let (u, v) = diameter_dominating_pair(&g)?;
            let d = g.diameter().unwrap_or(0);
            ensure(
                is_dominating_pair(&g, u, v) && g.distance_matrix().at(u, v) == d,
                "diameter dominating pair",
            )?;
            json!({"member": true, "diameter_dominating_pair": [u, v]})
        }
        Ok(()) => json!({"member": true}),
        Err(t) => {
            let [a, b, z] = t;
            ensure(
                avoids(&g, a, b, z) && avoids(&g, a, z, b) && avoids(&g, b, z, a),
                "asteroidal triple",
            )?;
            json!({"member": false, "asteroidal_triple": t})
        }
    };
    r.insert("at_free".into(), at_free);

    r.insert("chordal".into(), json!(is_chordal(&g)));
    r.insert("split".into(), json!(is_split(&g)));
    r.insert("cobipartite".into(), json!(is_cobipartite(&g)));
    let cb = if g.is_bipartite() {
        match is_chordal_bipartite(&g) {
            Ok(b) => json!(b),
            Err(Error::Capacity { .. }) => Value::Null,
            Err(e) => return Err(e.into()),
        }
    } else {
        json!(false)
    };
    r.insert("chordal_bipartite".into(), cb);

    emit(
        Report {
            command: "recognize",
            digest: Some(digest),
            solver: None,
            result: Value::Object(r),
        },
        c,
        start,
    )
}

fn check_bags(g: &Graph, h: usize, bags: &[Vec<Vertex>]) -> Result<(), Failure> {
    let w = WitnessStructure::new(bags.to_vec(), WitnessMode::Minor);
    ensure(
        verify_witness(g, &Graph::complete(h), &w)?,
        "clique minor witness",
    )
}

fn hadwiger_by(g: &Graph, method: Method, cfg: &OracleConfig) -> Result<(&'static str, Value), Failure> {
    match method {
        Method::Cograph => {
            let (h, table) = hadwiger_cograph(g)?;
            Ok(("cograph", json!({"h": h, "cr_table": table.values})))
        }
        Method::Bipperm => {
            let r = hadwiger_bipperm(g)?;
            check_bags(g, r.h, &r.bags)?;
            Ok(("bipperm", json!({"h": r.h, "witness_bags": r.bags})))
        }
        Method::Oracle => {
            let r = hadwiger_oracle_with(g, cfg)?;
            check_bags(g, r.value, &r.witness_bags)?;
            Ok(("oracle", json!({"h": r.value, "witness_bags": r.witness_bags})))
        }
        Method::Auto => {
            if is_cograph(g) || g.n() == 0 {
                hadwiger_by(g, Method::Cograph, cfg)
            } else if is_bipartite_permutation(g) {
                hadwiger_by(g, Method::Bipperm, cfg)
            } else {
                hadwiger_by(g, Method::Oracle, cfg).map_err(no_method)
            }
        }
    }
}

/// Capacity refusals from a fallback search mean no method applies.
fn no_method(f: Failure) -> Failure {
    match f {
        Failure::Capacity(m) => Failure::Inapplicable(format!(
            "no polynomial method applies to this graph class (the problem is NP-complete in general) \
             and exhaustive search refused it: {m}"
        )),
        other => other,
    }
}

pub fn hadwiger(c: &Common, method: Method) -> Outcome {
    let start = Instant::now();
    let (g, digest) = read_graph(c)?;
    let (solver, result) = hadwiger_by(&g, method, &config(c))?;
    emit(
        Report {
            command: "hadwiger",
            digest: Some(digest),
            solver: Some(solver),
            result,
        },
        c,
        start,
    )
}

pub fn clique_matching(c: &Common, method: Method) -> Outcome {
    let start = Instant::now();
    let (g, digest) = read_graph(c)?;
    let cfg = config(c);
    let (solver, (size, m)) = match method {
        Method::Cograph => {
            return Err(Failure::Input(
                "clique-matching has no cograph method; use auto, bipperm or oracle".into(),
            ))
        }
        Method::Bipperm => ("bipperm", max_clique_matching(&g)?),
        Method::Oracle => ("oracle", clique_matching_oracle_with(&g, &cfg)?),
        Method::Auto if is_bipartite_permutation(&g) => ("bipperm", max_clique_matching(&g)?),
        Method::Auto => (
            "oracle",
            clique_matching_oracle_with(&g, &cfg).map_err(|e| no_method(e.into()))?,
        ),
    };
    ensure(is_clique_matching(&g, &m) && m.len() == size, "clique-matching")?;
    emit(
        Report {
            command: "clique-matching",
            digest: Some(digest),
            solver: Some(solver),
            result: json!({"size": size, "matching": m}),
        },
        c,
        start,
    )
}

fn check_club(g: &Graph, s: usize, k: usize, edges: &[Edge]) -> Result<(), Failure> {
    let q = g.contract_edges(edges)?;
    ensure(
        edges.len() <= k && q.diameter().is_some_and(|d| d <= s),
        "contraction diameter",
    )
}

/// The AT-free solver's errors that send the command to exhaustive search instead.
fn falls_back(e: &Error) -> bool {
    matches!(e, Error::NotAtFree(_) | Error::Unsupported(_))
}

pub fn club(c: &Common, s: usize, k: Option<usize>) -> Outcome {
    let start = Instant::now();
    let (g, digest) = read_graph(c)?;
    if !g.is_connected() {
        return Err(Error::Disconnected.into());
    }
    let cfg = config(c);
    let (solver, result) = match k {
        Some(k) => {
            let (solver, decision) = match s_club_contract_decide(&g, k, s) {
                Ok(d) => ("at-free", d),
                Err(e) if falls_back(&e) => {
                    let found =
                        min_club_contraction_oracle_with(&g, s, k, &cfg).map_err(|e| no_method(e.into()))?;
                    ("oracle", found.map_or(ClubDecision::No, ClubDecision::Yes))
                }
                Err(e) => return Err(e.into()),
            };
            if let ClubDecision::Yes(edges) = &decision {
                check_club(&g, s, k, edges)?;
            }
            let mut r = json!({"s": s, "k": k});
            let extra = serde_json::to_value(&decision).expect("decision serializes");
            merge(&mut r, extra);
            (solver, r)
        }
        None => {
            let (solver, edges) = match min_club_contraction_atfree(&g, s) {
                Ok((_, edges)) => ("at-free", edges),
                Err(e) if falls_back(&e) => {
                    let found = min_club_contraction_oracle_with(&g, s, g.n().saturating_sub(1), &cfg)
                        .map_err(|e| no_method(e.into()))?;
                    (
                        "oracle",
                        found.expect("contracting a spanning tree reaches diameter 0"),
                    )
                }
                Err(e) => return Err(e.into()),
            };
            check_club(&g, s, edges.len(), &edges)?;
            (
                solver,
                json!({"s": s, "k_min": edges.len(), "witness_edges": edges}),
            )
        }
    };
    emit(
        Report {
            command: "club",
            digest: Some(digest),
            solver: Some(solver),
            result,
        },
        c,
        start,
    )
}

fn merge(into: &mut Value, from: Value) {
    if let (Value::Object(a), Value::Object(b)) = (into, from) {
        a.extend(b);
    }
}

fn need_s(s: Option<usize>, kind: &str) -> Result<usize, Failure> {
    s.ok_or_else(|| Failure::Input(format!("oracle {kind} needs --s")))
}

pub fn oracle(
    c: &Common,
    kind: OracleKind,
    s: Option<usize>,
    k: Option<usize>,
    max_singletons: Option<usize>,
) -> Outcome {
    let start = Instant::now();
    let (g, digest) = read_graph(c)?;
    let cfg = config(c);
    let result = match kind {
        OracleKind::Hadwiger => {
            let r = hadwiger_oracle_with(&g, &cfg)?;
            check_bags(&g, r.value, &r.witness_bags)?;
            json!({"h": r.value, "witness_bags": r.witness_bags})
        }
        OracleKind::Minor => {
            let r = hadwiger_minor_oracle(&g, &cfg)?;
            check_bags(&g, r.value, &r.witness_bags)?;
            json!({"h": r.value, "witness_bags": r.witness_bags})
        }
        OracleKind::CliqueMatching => {
            let (size, m) = clique_matching_oracle_with(&g, &cfg)?;
            json!({"size": size, "matching": m})
        }
        OracleKind::Nice => {
            let t = nice_structure_oracle_with(&g, &cfg, max_singletons)?;
            json!({"best": t.best, "per_r": t.per_r, "witness_bags": t.witness_bags})
        }
        OracleKind::Club => {
            let s = need_s(s, "club")?;
            let k_max = k.unwrap_or(g.n().saturating_sub(1));
            match min_club_contraction_oracle_with(&g, s, k_max, &cfg)? {
                Some(edges) => {
                    check_club(&g, s, k_max, &edges)?;
                    json!({"s": s, "k_max": k_max, "k_min": edges.len(), "witness_edges": edges})
                }
                None => json!({"s": s, "k_max": k_max, "k_min": null}),
            }
        }
        OracleKind::ClubMinor => {
            let s = need_s(s, "club-minor")?;
            let r = max_s_club_minor_oracle_with(&g, s, &cfg)?;
            json!({"s": s, "value": r.value, "witness_bags": r.witness_bags})
        }
        OracleKind::Chordality => {
            let cap = c.cap.unwrap_or(DEFAULT_CHORDALITY_CAP);
            json!({"chordality": chordality_capped(&g, cap)?})
        }
    };
    emit(
        Report {
            command: "oracle",
            digest: Some(digest),
            solver: Some("oracle"),
            result,
        },
        c,
        start,
    )
}

struct Built {
    graph: Graph,
    k: Option<usize>,
    target: String,
    roles: BTreeMap<String, Vec<Vertex>>,
}

pub fn reduce(c: &Common, kind: ReduceKind, out: &Output) -> Outcome {
    let start = Instant::now();
    let (built, digest) = match kind {
        ReduceKind::Nae3sat => {
            let input = read(c)?;
            let inst = nae3sat_to_cobipartite(&parse_dimacs_cnf(&input.bytes)?)?;
            (
                Built {
                    graph: inst.graph,
                    k: Some(inst.k),
                    target: inst.target,
                    roles: inst.roles,
                },
                input.digest,
            )
        }
        ReduceKind::HittingSet { s, k } => {
            let input = read(c)?;
            let source = parse_set_system(&input.bytes, k)?;
            let inst = if s == 2 {
                hitting_set_to_split(&source)
            } else {
                hitting_set_to_chordal(&source)
            };
            (
                Built {
                    graph: inst.graph,
                    k: Some(inst.k),
                    target: inst.target,
                    roles: inst.roles,
                },
                input.digest,
            )
        }
        ReduceKind::Lift { k } => {
            let (g, digest) = read_graph(c)?;
            let n = g.n();
            let lifted = pendant_lift(&g, k);
            let roles = BTreeMap::from([
                ("original".to_string(), (0..n).collect()),
                ("pendant".to_string(), (n..lifted.n()).collect()),
            ]);
            (
                Built {
                    graph: lifted,
                    k: Some(k),
                    target: format!(
                        "diameter <= s + 2 with {k} contractions iff the input reaches diameter <= s"
                    ),
                    roles,
                },
                digest,
            )
        }
        ReduceKind::Subdivide => {
            let (g, digest) = read_graph(c)?;
            let n = g.n();
            let sub = subdivide_edges(&g);
            let roles = BTreeMap::from([
                ("original".to_string(), (0..n).collect()),
                ("subdivision".to_string(), (n..sub.n()).collect()),
            ]);
            (
                Built {
                    graph: sub,
                    k: None,
                    target: "every edge subdivided once".into(),
                    roles,
                },
                digest,
            )
        }
    };
    let sidecar = json!({
        "schema": SCHEMA,
        "k": built.k,
        "target": built.target,
        "role_labels": built.roles,
    });
    write_graph("reduce", &built.graph, Some(sidecar), Some(digest), c, out, start)
}

fn write_graph(
    command: &'static str,
    g: &Graph,
    sidecar: Option<Value>,
    digest: Option<String>,
    c: &Common,
    out: &Output,
    start: Instant,
) -> Outcome {
    let text = emit_graph(g, out.out_format);
    let mut result = json!({"n": g.n(), "m": g.m(), "format": out.out_format.to_string()});
    match &out.output {
        Some(path) => {
            write_file(path, &text)?;
            merge(&mut result, json!({"output": path.display().to_string()}));
            if let Some(side) = &sidecar {
                let side_path = format!("{}.json", path.display());
                let mut body = serde_json::to_string_pretty(side).expect("plain JSON values serialize");
                body.push('\n');
                write_file(Path::new(&side_path), body.as_bytes())?;
                merge(&mut result, json!({"sidecar": side_path}));
            }
        }
        None if c.json => {
            merge(&mut result, json!({"graph": String::from_utf8_lossy(&text)}));
            if let Some(side) = sidecar {
                merge(&mut result, side);
                if let Value::Object(m) = &mut result {
                    m.remove("schema");
                }
            }
        }
        None => {
            crate::report::out(&String::from_utf8_lossy(&text));
            return Ok(());
        }
    }
    emit(
        Report {
            command,
            digest,
            solver: None,
            result,
        },
        c,
        start,
    )
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), Failure> {
    std::fs::write(path, bytes).map_err(|e| Failure::Input(format!("writing {}: {e}", path.display())))
}

pub fn generate(c: &Common, family: Family, n: usize, p: f64, out: &Output) -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
    let unit = || {
        if (0.0..=1.0).contains(&p) {
            Ok(p)
        } else {
            Err(Failure::Input(format!("--p must lie in [0, 1], got {p}")))
        }
    };
    let g = match family {
        Family::Path => Graph::path(n),
        Family::Cycle => {
            if n < 3 {
                return Err(Failure::Input("a cycle needs at least 3 vertices".into()));
            }
            Graph::cycle(n)
        }
        Family::Complete => Graph::complete(n),
        Family::Cograph if n == 0 => Graph::new(0),
        Family::Cograph => generate::random_cograph(n, &mut rng).0,
        Family::BipartitePermutation => generate::random_bipartite_permutation(n / 2, n - n / 2, &mut rng),
        Family::Interval => {
            if p.is_nan() || p <= 0.0 {
                return Err(Failure::Input(format!(
                    "--p is the interval spread and must be positive, got {p}"
                )));
            }
            generate::random_interval_graph(n, p, &mut rng)
        }
        Family::Chordal => generate::random_chordal(n, unit()?, &mut rng),
        Family::Gnp => generate::random_gnp(n, unit()?, &mut rng),
    };
    write_graph("generate", &g, None, None, c, out, start)
}
