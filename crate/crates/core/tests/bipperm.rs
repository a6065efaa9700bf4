use minorkit::bipperm::{hadwiger_bipperm, max_clique_matching};
use minorkit::generate::{bipartite_graphs, random_banded_permutation_graph, random_bipartite_permutation};
use minorkit::graph::Graph;
use minorkit::oracle::{clique_matching_oracle, hadwiger_oracle, is_clique_matching};
use minorkit::recognition::{is_bipartite_permutation, strong_ordering, verify_ordering};
use minorkit::witness::{verify_witness, WitnessMode, WitnessStructure};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn check(g: &Graph) {
    let (size, m) = max_clique_matching(g).unwrap();
    assert!(is_clique_matching(g, &m));
    assert_eq!(m.len(), size);
    assert_eq!(size, clique_matching_oracle(g).unwrap().0, "matching on {g:?}");
    let h = hadwiger_bipperm(g).unwrap();
    assert_eq!(h.h, hadwiger_oracle(g).unwrap().value, "hadwiger on {g:?}");
    assert!(h.singletons <= 2);
    let w = WitnessStructure::new(h.bags.clone(), WitnessMode::InducedMinor);
    assert!(
        verify_witness(g, &Graph::complete(h.h), &w).unwrap(),
        "witness {:?} on {g:?}",
        h.bags
    );
}

#[test]
fn exhaustive_small_sides() {
    for a in 1..=3 {
        for b in 1..=7 - a {
            for g in bipartite_graphs(a, b) {
                if g.is_connected() && is_bipartite_permutation(&g) {
                    check(&g);
                }
            }
        }
    }
}

#[test]
fn random_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let g = random_bipartite_permutation(rng.gen_range(1..6), rng.gen_range(1..6), &mut rng);
        check(&g);
        let p = random_banded_permutation_graph(rng.gen_range(2..11), 3, &mut rng);
        if p.is_bipartite() {
            check(&p);
        }
    }
}

#[test]
fn induced_subgraphs_keep_ordering() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..50 {
        let g = random_bipartite_permutation(5, 5, &mut rng);
        let ord = strong_ordering(&g).unwrap();
        let keep: Vec<usize> = (0..g.n()).filter(|_| rng.gen_bool(0.7)).collect();
        let sub = g.induced_subgraph(&keep).unwrap();
        assert!(verify_ordering(&sub, &ord.restrict(&keep)).unwrap());
    }
}
