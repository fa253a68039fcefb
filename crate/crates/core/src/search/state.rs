use std::sync::Arc;

use rand::Rng;

use crate::cube::{EdgeId, EdgeSet, Hypercube};
use crate::error::{Error, Result};

/// An edge set with per-cycle counters of present edges.
///
/// `violations` always equals the number of cycles whose counter is 4, and
/// every move updates only the `n - 1` counters of the cycles through the
/// moved edge. Present and absent edges are also kept in two index lists so
/// swap proposals can be drawn uniformly in O(1).
#[derive(Clone, Debug)]
pub struct SearchState {
    cube: Arc<Hypercube>,
    edges: EdgeSet,
    present: Vec<u8>,
    violations: usize,
    inside: Vec<EdgeId>,
    outside: Vec<EdgeId>,
    // position of each edge within `inside` or `outside`
    slot: Vec<u32>,
}

impl SearchState {
    pub fn new(cube: Arc<Hypercube>, edges: EdgeSet) -> Result<Self> {
        if cube.dim() != edges.dim() {
            return Err(Error::DimensionMismatch {
                left: cube.dim().n(),
                right: edges.dim().n(),
            });
        }
        let (present, violations) = recount(&cube, &edges);
        let dim = cube.dim();
        let mut inside = Vec::with_capacity(edges.len());
        let mut outside = Vec::with_capacity(dim.edge_count() - edges.len());
        let mut slot = vec![0u32; dim.edge_count()];
        for e in dim.edges() {
            let list = if edges.contains(e) {
                &mut inside
            } else {
                &mut outside
            };
            slot[e.index()] = list.len() as u32;
            list.push(e);
        }
        Ok(SearchState {
            cube,
            edges,
            present,
            violations,
            inside,
            outside,
            slot,
        })
    }

    pub fn cube(&self) -> &Arc<Hypercube> {
        &self.cube
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn into_edges(self) -> EdgeSet {
        self.edges
    }

    #[inline]
    pub fn violations(&self) -> usize {
        self.violations
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn present_counts(&self) -> &[u8] {
        &self.present
    }

    /// Change in the violation count if `e` were toggled.
    #[inline]
    pub fn toggle_delta(&self, e: EdgeId) -> i64 {
        let inc = self.cube.incident(e);
        if self.edges.contains(e) {
            -(inc
                .iter()
                .filter(|&&c| self.present[c as usize] == 4)
                .count() as i64)
        } else {
            inc.iter()
                .filter(|&&c| self.present[c as usize] == 3)
                .count() as i64
        }
    }

    /// Toggles `e` and returns the change in the violation count.
    pub fn apply_toggle(&mut self, e: EdgeId) -> i64 {
        if self.edges.contains(e) {
            self.remove(e)
        } else {
            self.add(e)
        }
    }

    fn check_swap(&self, out: EdgeId, inn: EdgeId) -> Result<()> {
        let count = self.cube.dim().edge_count();
        if out.index() >= count || inn.index() >= count {
            return Err(Error::InvalidMove(format!(
                "edge id out of range in swap {out} -> {inn}"
            )));
        }
        if !self.edges.contains(out) {
            return Err(Error::InvalidMove(format!(
                "edge {out} to remove is absent"
            )));
        }
        if self.edges.contains(inn) {
            return Err(Error::InvalidMove(format!("edge {inn} to add is present")));
        }
        Ok(())
    }

    /// Change in the violation count if `out` were removed and `inn` added.
    pub fn swap_delta(&self, out: EdgeId, inn: EdgeId) -> Result<i64> {
        self.check_swap(out, inn)?;
        Ok(self.swap_delta_unchecked(out, inn))
    }

    #[inline]
    pub(crate) fn swap_delta_unchecked(&self, out: EdgeId, inn: EdgeId) -> i64 {
        let out_inc = self.cube.incident(out);
        let mut delta = -(out_inc
            .iter()
            .filter(|&&c| self.present[c as usize] == 4)
            .count() as i64);
        for &c in self.cube.incident(inn) {
            let shared = out_inc.contains(&c) as u8;
            if self.present[c as usize] - shared == 3 {
                delta += 1;
            }
        }
        delta
    }

    /// Removes `out`, adds `inn`; returns the change in the violation count.
    pub fn apply_swap(&mut self, out: EdgeId, inn: EdgeId) -> Result<i64> {
        self.check_swap(out, inn)?;
        Ok(self.remove(out) + self.add(inn))
    }

    fn add(&mut self, e: EdgeId) -> i64 {
        let mut delta = 0;
        for &c in self.cube.incident(e) {
            let p = &mut self.present[c as usize];
            *p += 1;
            delta += (*p == 4) as i64;
        }
        self.violations = (self.violations as i64 + delta) as usize;
        self.edges.insert(e);
        move_between(&mut self.outside, &mut self.inside, &mut self.slot, e);
        delta
    }

    fn remove(&mut self, e: EdgeId) -> i64 {
        let mut delta = 0;
        for &c in self.cube.incident(e) {
            let p = &mut self.present[c as usize];
            delta -= (*p == 4) as i64;
            *p -= 1;
        }
        self.violations = (self.violations as i64 + delta) as usize;
        self.edges.remove(e);
        move_between(&mut self.inside, &mut self.outside, &mut self.slot, e);
        delta
    }

    /// Uniformly random present edge, if any.
    pub fn random_present<R: Rng + ?Sized>(&self, rng: &mut R) -> Option<EdgeId> {
        (!self.inside.is_empty()).then(|| self.inside[rng.gen_range(0..self.inside.len())])
    }

    /// Uniformly random absent edge, if any.
    pub fn random_absent<R: Rng + ?Sized>(&self, rng: &mut R) -> Option<EdgeId> {
        (!self.outside.is_empty()).then(|| self.outside[rng.gen_range(0..self.outside.len())])
    }

    /// Recomputes counters from scratch and compares them with the
    /// incrementally maintained ones.
    pub fn is_consistent(&self) -> bool {
        let (present, violations) = recount(&self.cube, &self.edges);
        present == self.present
            && violations == self.violations
            && self.inside.len() == self.edges.len()
            && self.inside.iter().all(|&e| self.edges.contains(e))
            && self.outside.iter().all(|&e| !self.edges.contains(e))
    }
}

fn move_between(from: &mut Vec<EdgeId>, to: &mut Vec<EdgeId>, slot: &mut [u32], e: EdgeId) {
    let k = slot[e.index()] as usize;
    debug_assert_eq!(from[k], e);
    from.swap_remove(k);
    if let Some(&moved) = from.get(k) {
        slot[moved.index()] = k as u32;
    }
    slot[e.index()] = to.len() as u32;
    to.push(e);
}

fn recount(cube: &Hypercube, edges: &EdgeSet) -> (Vec<u8>, usize) {
    let present: Vec<u8> = (0..cube.c4_count())
        .map(|c| {
            cube.cycle_edges(c)
                .iter()
                .filter(|&&e| edges.contains(e))
                .count() as u8
        })
        .collect();
    let violations = present.iter().filter(|&&p| p == 4).count();
    (present, violations)
}
