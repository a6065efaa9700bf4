use std::io::Write;
use std::process::{Command, Stdio};

use minorkit::io::to_graph6;
use minorkit::Graph;
use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_minorkit"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str], g: &Graph) -> (i32, Value) {
    let mut full = args.to_vec();
    full.push("--json");
    let (code, out, _) = run(&full, &format!("{}\n", to_graph6(g)));
    (code, serde_json::from_str(&out).unwrap())
}

#[test]
fn recognize_examples() {
    let (code, v) = json(&["recognize"], &Graph::cycle(4));
    assert_eq!(code, 0);
    let r = &v["result"];
    assert_eq!(r["cograph"]["member"], true);
    assert_eq!(r["bipartite_permutation"]["member"], true);
    assert_eq!(r["at_free"]["member"], true);
    assert_eq!(v["schema"], 1);

    let (_, v) = json(&["recognize"], &Graph::path(4));
    assert_eq!(v["result"]["cograph"]["member"], false);
    assert_eq!(v["result"]["cograph"]["induced_p4"].as_array().unwrap().len(), 4);

    let (_, v) = json(&["recognize"], &Graph::cycle(6));
    assert_eq!(v["result"]["at_free"]["member"], false);
    assert_eq!(
        v["result"]["at_free"]["asteroidal_triple"]
            .as_array()
            .unwrap()
            .len(),
        3
    );
}

#[test]
fn hadwiger_dispatch() {
    let (_, v) = json(&["hadwiger"], &Graph::complete(5));
    assert_eq!(
        (v["solver"].as_str(), v["result"]["h"].as_u64()),
        (Some("cograph"), Some(5))
    );
    let k33 = Graph::complete_bipartite(3, 3);
    let (_, v) = json(&["hadwiger", "--method", "bipperm"], &k33);
    assert_eq!(v["result"]["h"], 4);
    let (_, v) = json(&["hadwiger"], &Graph::path(6));
    assert_eq!(
        (v["solver"].as_str(), v["result"]["h"].as_u64()),
        (Some("bipperm"), Some(2))
    );
    let (_, v) = json(&["hadwiger"], &Graph::cycle(7));
    assert_eq!(
        (v["solver"].as_str(), v["result"]["h"].as_u64()),
        (Some("oracle"), Some(3))
    );

    // Petersen: neither class, 10 vertices, within the oracle's reach.
    let mut petersen = Graph::new(10);
    for i in 0..5 {
        petersen.add_edge(i, (i + 1) % 5);
        petersen.add_edge(i, i + 5);
        petersen.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    let (_, v) = json(&["hadwiger"], &petersen);
    // K_6 would need 15 edges between bags plus 4 inside them; there are only 15.
    assert_eq!(v["result"]["h"], 5);

    let mut big = petersen.clone();
    for _ in 0..3 {
        big = Graph::disjoint_union(&big, &Graph::new(1));
    }
    let n = big.n();
    big.add_edge(0, n - 3);
    big.add_edge(n - 3, n - 2);
    big.add_edge(n - 2, n - 1);
    big.add_edge(n - 1, 5);
    let (code, v) = json(&["hadwiger"], &big);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["kind"], "inapplicable");
    let (code, _) = json(&["hadwiger", "--method", "oracle"], &big);
    assert_eq!(code, 4);
    let (code, _) = json(&["hadwiger", "--method", "cograph"], &Graph::path(4));
    assert_eq!(code, 3);
}

#[test]
fn club_examples() {
    let (_, v) = json(&["club", "--s", "3"], &Graph::path(7));
    assert_eq!(
        (v["solver"].as_str(), v["result"]["k_min"].as_u64()),
        (Some("at-free"), Some(3))
    );
    let (_, v) = json(&["club", "--s", "2"], &Graph::cycle(6));
    assert_eq!(
        (v["solver"].as_str(), v["result"]["k_min"].as_u64()),
        (Some("oracle"), Some(1))
    );
    let (_, v) = json(&["club", "--s", "2", "--k", "1"], &Graph::cycle(6));
    assert_eq!(v["result"]["answer"], "yes");
    let (_, v) = json(&["club", "--s", "2", "--k", "2"], &Graph::path(7));
    assert_eq!(v["result"]["answer"], "no");
    let (code, v) = json(&["club", "--s", "2"], &Graph::new(3));
    assert_eq!(code, 3);
    assert!(v["error"]["message"]
        .as_str()
        .unwrap()
        .contains("finite diameter"));
}

#[test]
fn oracle_wrappers() {
    let (_, v) = json(&["oracle", "hadwiger"], &Graph::cycle(5));
    assert_eq!(v["result"]["h"], 3);
    let (_, v) = json(&["oracle", "clique-matching"], &Graph::complete_bipartite(3, 3));
    assert_eq!(v["result"]["size"], 3);
    let (_, v) = json(&["oracle", "chordality"], &Graph::cycle(8));
    assert_eq!(v["result"]["chordality"], 8);
    let (code, _) = json(&["oracle", "club"], &Graph::cycle(5));
    assert_eq!(code, 2);
}

#[test]
fn reduce_writes_graph_and_sidecar() {
    let dir = std::path::PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-reduce");
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("split.el");
    let out_s = out.to_str().unwrap();
    let (code, _, err) = run(
        &[
            "reduce",
            "hitting-set",
            "--k",
            "1",
            "--output",
            out_s,
            "--out-format",
            "edgelist",
        ],
        "2 1\n0\n",
    );
    assert_eq!(code, 0, "{err}");
    let g = minorkit::io::parse_edgelist(&std::fs::read(&out).unwrap()).unwrap();
    assert_eq!(g.n(), 9);
    let side: Value = serde_json::from_slice(&std::fs::read(format!("{out_s}.json")).unwrap()).unwrap();
    assert_eq!(side["k"], 1);
    assert_eq!(side["target"], "diameter <= 2");
    assert_eq!(side["role_labels"]["x"], serde_json::json!([5]));

    let (code, text, _) = run(&["reduce", "nae3sat"], "p cnf 2 1\n1 -2 2 0\n");
    assert_eq!(code, 0);
    assert_eq!(minorkit::io::parse_graph6(text.as_bytes()).unwrap().n(), 19);
    let (code, _, _) = run(&["reduce", "nae3sat"], "p cnf 2 1\n1 2 0\n");
    assert_eq!(code, 2);
    let (code, text, _) = run(
        &["reduce", "subdivide"],
        &format!("{}\n", to_graph6(&Graph::complete(3))),
    );
    assert_eq!(code, 0);
    let c6 = minorkit::io::parse_graph6(text.as_bytes()).unwrap();
    assert_eq!((c6.n(), c6.m()), (6, 6));
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(run(&["hadwiger", "--format", "edgelist"], "nonsense\n").0, 2);
    assert_eq!(run(&["hadwiger", "--input", "/no/such/file"], "").0, 2);
    assert_eq!(run(&["hadwiger", "--format", "png"], "").0, 2);
    assert_eq!(run(&["club"], "").0, 2);
}

#[test]
fn formats_are_detected() {
    let (code, out, _) = run(&["hadwiger", "--json"], "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    assert_eq!(code, 0);
    assert!(out.contains("\"h\": 3"));
    let (_, out, _) = run(&["hadwiger", "--json"], "3 2\n0 1\n1 2\n");
    assert!(out.contains("\"h\": 2"));
}

#[test]
fn human_output_reports_elapsed_json_does_not() {
    let g = format!("{}\n", to_graph6(&Graph::complete(4)));
    let (_, human, _) = run(&["hadwiger"], &g);
    assert!(human.contains("elapsed:") && human.contains("h: 4"));
    let (_, js, _) = run(&["hadwiger", "--json"], &g);
    assert!(!js.contains("elapsed"));
}

#[test]
fn generate_depends_only_on_seed() {
    let a = run(&["generate", "gnp", "--n", "10", "--seed", "7"], "").1;
    let b = run(&["generate", "gnp", "--n", "10", "--seed", "7"], "").1;
    let c = run(&["generate", "gnp", "--n", "10", "--seed", "8"], "").1;
    assert_eq!(a, b);
    assert_ne!(a, c);
    assert_eq!(run(&["generate", "gnp", "--n", "4", "--p", "2"], "").0, 2);
}
