use itertools::Itertools;
use minorkit::generate::{nonisomorphic_graphs, random_chordal, random_gnp};
use minorkit::graph::{is_chordal, Graph};
use minorkit::oracle::min_club_contraction_oracle;
use minorkit::recognition::{is_cobipartite, is_split};
use minorkit::reductions::*;
use minorkit::witness::verify_witness;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn all_clauses(vars: usize) -> Vec<[i32; 3]> {
    let lits: Vec<i32> = (1..=vars as i32).flat_map(|v| [v, -v]).collect();
    lits.into_iter()
        .combinations_with_replacement(3)
        .map(|c| [c[0], c[1], c[2]])
        .collect()
}

pub fn all_formulas() -> Vec<NaeFormula> {
    let mut out = Vec::new();
    for vars in 1..=2 {
        let clauses = all_clauses(vars);
        for m in 0..=2 {
            for pick in clauses.iter().copied().combinations_with_replacement(m) {
                out.push(NaeFormula::new(vars, pick).unwrap());
            }
        }
    }
    out
}

#[test]
fn nae_round_trip() {
    let formulas = all_formulas();
    let mut yes = 0;
    for phi in &formulas {
        let inst = nae3sat_to_cobipartite(phi).unwrap();
        assert!(is_cobipartite(&inst.graph));
        let contractible = min_club_contraction_oracle(&inst.graph, 1, inst.k).unwrap();
        let sat = nae3sat_solve(phi).unwrap();
        assert_eq!(contractible.is_some(), sat.is_some(), "{phi:?}");
        if let Some(a) = sat {
            yes += 1;
            let w = nae_witness(&inst, &a);
            assert!(verify_witness(&inst.graph, &Graph::complete(w.len()), &w).unwrap());
        }
    }
    assert!(yes > 0 && yes < formulas.len());
}

pub fn all_hitting_sets() -> Vec<HittingSetInstance> {
    let mut out = Vec::new();
    for u in 1..=3usize {
        let sets: Vec<Vec<usize>> = (1u32..1 << u)
            .map(|mask| (0..u).filter(|&i| mask >> i & 1 == 1).collect())
            .collect();
        for m in 0..=2 {
            for family in sets.iter().cloned().combinations_with_replacement(m) {
                for k in 0..=1 {
                    out.push(HittingSetInstance::new(u, family.clone(), k).unwrap());
                }
            }
        }
    }
    out
}

#[test]
fn hitting_set_round_trip() {
    let instances = all_hitting_sets();
    let mut yes = 0;
    for inst in &instances {
        let hit = hitting_set_solve(inst).unwrap();
        yes += usize::from(hit.is_some());
        for (s, red) in [(2, hitting_set_to_split(inst)), (3, hitting_set_to_chordal(inst))] {
            if s == 2 {
                assert!(is_split(&red.graph));
            } else {
                assert!(is_chordal(&red.graph));
            }
            let found = min_club_contraction_oracle(&red.graph, s, red.k).unwrap();
            assert_eq!(found.is_some(), hit.is_some(), "s = {s}, {inst:?}");
            if let Some(h) = &hit {
                let q = red
                    .graph
                    .contract_edges(&hitting_set_witness_edges(&red, h))
                    .unwrap();
                assert!(q.diameter().unwrap() <= s);
            }
        }
    }
    assert!(yes > 0 && yes < instances.len());
}

#[test]
fn pendant_lift_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut graphs: Vec<Graph> = (2..=5)
        .flat_map(nonisomorphic_graphs)
        .filter(|g| g.is_connected() && is_chordal(g))
        .collect();
    graphs.extend((0..20).map(|_| random_chordal(6, 0.5, &mut rng)));
    for g in &graphs {
        for k in 0..=1 {
            let lifted = pendant_lift(g, k);
            assert_eq!(lifted.n(), g.n() * (k + 2));
            assert!(is_chordal(&lifted));
            assert_eq!(lifted.diameter().unwrap(), g.diameter().unwrap() + 2);
            for s in 3..=4 {
                let a = min_club_contraction_oracle(&lifted, s, k).unwrap().is_some();
                let b = min_club_contraction_oracle(g, s - 2, k).unwrap().is_some();
                assert_eq!(a, b, "{g:?} k = {k} s = {s}");
            }
        }
    }
}

#[test]
fn subdivisions_are_bipartite() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let g = random_gnp(8, 0.4, &mut rng);
        let h = subdivide_edges(&g);
        assert_eq!(h.n(), g.n() + g.m());
        assert_eq!(h.m(), 2 * g.m());
        assert!(h.is_bipartite());
    }
    let k4 = subdivide_edges(&Graph::complete(4));
    assert_eq!(minorkit::oracle::hadwiger_oracle(&k4).unwrap().value, 4);
}
