//! Class membership tests and the structural certificates the solvers consume.

mod atfree;
mod classes;
mod cograph;
mod ordering;

pub use atfree::{diameter_dominating_pair, is_at_free, is_dominating_pair};
pub use classes::{is_chordal_bipartite, is_chordal_bipartite_capped, is_cobipartite, is_split};
pub use cograph::{recognize_cograph, verify_cotree, Cotree};
pub use ordering::{
    exhaustive_ordering, is_bipartite_permutation, strong_ordering, verify_ordering, StrongOrdering,
    EXHAUSTIVE_ORDERING_LIMIT,
};

pub fn is_cograph(g: &crate::graph::Graph) -> bool {
    recognize_cograph(g).is_ok()
}
