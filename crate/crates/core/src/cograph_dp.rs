//! Hadwiger number of cographs by a fold over the cotree.
//!
//! `c_r(G)` is the largest `p` admitting a nice `K_p` induced-minor structure (bags of size one
//! or two, pairwise adjacent) with exactly `r` edge-bags, or 0 if there is none.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognition::{recognize_cograph, Cotree};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrTable {
    pub n: usize,
    /// Indexed by `r` in `0..=n`.
    pub values: Vec<usize>,
}

impl CrTable {
    pub fn empty() -> Self {
        CrTable {
            n: 0,
            values: vec![0],
        }
    }

    pub fn get(&self, r: usize) -> usize {
        self.values.get(r).copied().unwrap_or(0)
    }

    pub fn max(&self) -> usize {
        self.values.iter().copied().max().unwrap_or(0)
    }
}

pub fn cr_leaf() -> CrTable {
    CrTable {
        n: 1,
        values: vec![1, 0],
    }
}

pub fn cr_union(t1: &CrTable, t2: &CrTable) -> CrTable {
    let n = t1.n + t2.n;
    CrTable {
        n,
        values: (0..=n).map(|r| t1.get(r).max(t2.get(r))).collect(),
    }
}

pub fn cr_join(t1: &CrTable, t2: &CrTable) -> CrTable {
    let n = t1.n + t2.n;
    let values = (0..=n)
        .map(|r| {
            let mut best = 0;
            for s in 0..=r.min(t1.n).min(t2.n) {
                best = best.max(split_value(t1, t2, r, s)).max(split_value(t2, t1, r, s));
            }
            best
        })
        .collect();
    CrTable { n, values }
}

/// `s` edge-bags cross the join, the other `r - s` lie inside `own`, and the remaining bags of
/// `other` form a clique of singletons.
fn split_value(own: &CrTable, other: &CrTable, r: usize, s: usize) -> usize {
    if own.n + s < 2 * r {
        return 0;
    }
    let inner = own.get(r - s);
    // Without this check an infeasible inner table entry (0) would still be paid for by the
    // crossing bags; K_{1,3} at r = 2 is the smallest case where that overcounts.
    if r > s && inner == 0 {
        return 0;
    }
    s + inner.min(own.n - r) + (other.n - s).min(other.get(0))
}

pub fn cotree_table(t: &Cotree) -> CrTable {
    match t {
        Cotree::Leaf(_) => cr_leaf(),
        Cotree::Union(ch) => fold(ch, cr_union),
        Cotree::Join(ch) => fold(ch, cr_join),
    }
}

fn fold(children: &[Cotree], op: fn(&CrTable, &CrTable) -> CrTable) -> CrTable {
    let mut it = children.iter().map(cotree_table);
    let first = it.next().unwrap_or_else(CrTable::empty);
    it.fold(first, |acc, t| op(&acc, &t))
}

/// Returns `h(G)` and the root table.
pub fn hadwiger_cograph(g: &Graph) -> Result<(usize, CrTable)> {
    match recognize_cograph(g) {
        Ok(None) => Ok((0, CrTable::empty())),
        Ok(Some(t)) => {
            let table = cotree_table(&t);
            Ok((table.max(), table))
        }
        Err(p4) => Err(Error::NotCograph(p4)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k1() -> CrTable {
        cr_leaf()
    }

    fn two_k1() -> CrTable {
        cr_union(&k1(), &k1())
    }

    #[test]
    fn base_tables() {
        assert_eq!(cr_leaf().values, vec![1, 0]);
        assert_eq!(two_k1().values, vec![1, 0, 0]);
        assert_eq!(cr_join(&k1(), &k1()).values, vec![2, 1, 0]);
        let k2 = cr_join(&k1(), &k1());
        assert_eq!(cr_union(&k2, &k2).values, vec![2, 1, 0, 0, 0]);
        assert_eq!(cr_union(&k2, &CrTable::empty()), k2);
    }

    #[test]
    fn c4_table() {
        assert_eq!(cr_join(&two_k1(), &two_k1()).values, vec![2, 3, 2, 0, 0]);
    }

    #[test]
    fn star_needs_the_feasibility_check() {
        let three = cr_union(&two_k1(), &k1());
        let star = cr_join(&k1(), &three);
        assert_eq!(star.values, vec![2, 2, 0, 0, 0]);
        // Unguarded, r = 2 with one crossing bag and one inside the leaves scores 1 + min(0, 3 - 2) +
        // min(1 - 1, 1) = 1, though the leaves span no edge.
        assert_eq!(three.get(1), 0);
    }

    #[test]
    fn whole_graphs() {
        assert_eq!(hadwiger_cograph(&Graph::complete(5)).unwrap().0, 5);
        assert_eq!(hadwiger_cograph(&Graph::cycle(4)).unwrap().0, 3);
        let k222 = Graph::join(&Graph::join(&Graph::new(2), &Graph::new(2)), &Graph::new(2));
        assert_eq!(hadwiger_cograph(&k222).unwrap().0, 4);
        assert_eq!(hadwiger_cograph(&Graph::new(0)).unwrap().0, 0);
        assert_eq!(hadwiger_cograph(&Graph::new(3)).unwrap().0, 1);
        assert!(matches!(
            hadwiger_cograph(&Graph::path(4)),
            Err(Error::NotCograph(_))
        ));
    }

    #[test]
    fn join_additive_at_r0() {
        let a = cr_join(&k1(), &two_k1());
        let b = cr_union(&k1(), &cr_join(&k1(), &k1()));
        assert_eq!(cr_join(&a, &b).get(0), a.get(0) + b.get(0));
    }
}
