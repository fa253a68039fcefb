//! Exhaustive branch-and-bound for `ex(Q_n, C4)` on very small cubes.
//!
//! Edges are decided in id order, include before exclude. Including an edge
//! that would complete a cycle is pruned, as is any node whose chosen plus
//! undecided edge count cannot beat the incumbent. The bound is deliberately
//! the trivial one; `n = 4` finishes in well under a second, `n = 5` is out of
//! reach without a stronger relaxation.

use serde::Serialize;

use crate::cube::{Dim, EdgeId, EdgeSet, FourCycle};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExactResult {
    pub n: u32,
    /// Largest C4-free edge count found. Proven optimal iff `proven`.
    pub optimum: usize,
    #[serde(skip)]
    pub witness: EdgeSet,
    pub nodes_explored: u64,
    pub proven: bool,
}

struct Search {
    dim: Dim,
    // for each edge, the other three edges of each cycle through it
    partners: Vec<Vec<[EdgeId; 3]>>,
    chosen: EdgeSet,
    best: EdgeSet,
    nodes: u64,
    node_limit: u64,
    aborted: bool,
}

impl Search {
    fn completes_cycle(&self, e: EdgeId) -> bool {
        self.partners[e.index()]
            .iter()
            .any(|others| others.iter().all(|&f| self.chosen.contains(f)))
    }

    fn descend(&mut self, next: usize) {
        if self.aborted {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.node_limit {
            self.aborted = true;
            return;
        }
        let total = self.dim.edge_count();
        if self.chosen.len() + (total - next) <= self.best.len() {
            return;
        }
        if next == total {
            // bound above guarantees strict improvement here
            self.best.clone_from(&self.chosen);
            return;
        }
        let e = EdgeId::new(next as u32);
        if !self.completes_cycle(e) {
            self.chosen.insert(e);
            self.descend(next + 1);
            self.chosen.remove(e);
        }
        self.descend(next + 1);
    }
}

/// Maximum C4-free edge count of `Q_n`, by exhaustive search.
///
/// If `node_limit` nodes are visited before the tree is exhausted, the best
/// set found so far is returned with `proven == false`.
pub fn exact_max(n: u32, node_limit: u64) -> Result<ExactResult> {
    let dim = Dim::new(n)?;
    if node_limit == 0 {
        return Err(Error::InvalidArgument("node limit must be positive".into()));
    }
    let partners = dim
        .edges()
        .map(|e| {
            dim.cycles_through(e)
                .map(|c: FourCycle| {
                    let mut others = [EdgeId::new(0); 3];
                    for (k, f) in c.edges.into_iter().filter(|&f| f != e).enumerate() {
                        others[k] = f;
                    }
                    others
                })
                .collect()
        })
        .collect();
    let mut search = Search {
        dim,
        partners,
        chosen: EdgeSet::empty(dim),
        best: EdgeSet::empty(dim),
        nodes: 0,
        node_limit,
        aborted: false,
    };
    search.descend(0);
    Ok(ExactResult {
        n,
        optimum: search.best.len(),
        witness: search.best,
        nodes_explored: search.nodes.min(node_limit),
        proven: !search.aborted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{is_c4_free, is_locally_maximal};

    /// Subset enumeration over all `2^|E|` edge sets.
    fn brute_force(n: u32) -> usize {
        let dim = Dim::new(n).unwrap();
        let m = dim.edge_count();
        let cycles: Vec<u32> = dim
            .cycles()
            .map(|c| c.edges.iter().fold(0u32, |acc, e| acc | 1 << e.index()))
            .collect();
        (0u32..1 << m)
            .filter(|&s| cycles.iter().all(|&c| s & c != c))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn q2_and_q3_against_brute_force() {
        assert_eq!(brute_force(2), 3);
        assert_eq!(brute_force(3), 9);
        for (n, expected) in [(2, 3), (3, 9)] {
            let r = exact_max(n, u64::MAX).unwrap();
            assert!(r.proven);
            assert_eq!(r.optimum, expected);
            assert_eq!(r.witness.len(), expected);
            assert!(is_c4_free(&r.witness).free);
            assert!(is_locally_maximal(&r.witness).unwrap());
        }
    }

    #[test]
    fn node_limit() {
        let r = exact_max(4, 10).unwrap();
        assert!(!r.proven);
        assert_eq!(r.nodes_explored, 10);
        assert!(is_c4_free(&r.witness).free);
        assert!(exact_max(4, 0).is_err());
        assert!(exact_max(1, 10).is_err());
    }
}
