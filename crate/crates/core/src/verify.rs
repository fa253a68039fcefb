//! C4-freeness certification and non-edge analysis.
//!
//! The scans here regenerate the cycles from the encoding on every call and
//! never touch the precomputed incidence tables the annealer uses, so they
//! serve as an independent check on search results.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cube::{EdgeId, EdgeSet, FourCycle};
use crate::error::{Error, Result};

/// Outcome of a full certification scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub free: bool,
    pub first_violation: Option<usize>,
    pub violations: usize,
    pub cycles_checked: usize,
}

#[inline]
fn complete(edges: &EdgeSet, c: &FourCycle) -> bool {
    c.edges.iter().all(|&e| edges.contains(e))
}

/// Scans every cycle in canonical order and reports the first complete one.
pub fn is_c4_free(edges: &EdgeSet) -> Verdict {
    let mut first_violation = None;
    let mut violations = 0;
    let mut cycles_checked = 0;
    for c in edges.dim().cycles() {
        cycles_checked += 1;
        if complete(edges, &c) {
            first_violation.get_or_insert(c.id);
            violations += 1;
        }
    }
    Verdict {
        free: violations == 0,
        first_violation,
        violations,
        cycles_checked,
    }
}

/// Number of cycles whose four edges are all present.
pub fn count_violations(edges: &EdgeSet) -> usize {
    edges.dim().cycles().filter(|c| complete(edges, c)).count()
}

/// Number of cycles that adding the absent edge `e` would complete.
pub fn c4s_created_by_adding(edges: &EdgeSet, e: EdgeId) -> Result<usize> {
    let dim = edges.dim();
    dim.check_edge(e.index() as u64)?;
    if edges.contains(e) {
        return Err(Error::AlreadyPresent(e));
    }
    Ok(created_unchecked(edges, e))
}

fn created_unchecked(edges: &EdgeSet, e: EdgeId) -> usize {
    edges
        .dim()
        .cycles_through(e)
        .filter(|c| c.edges.iter().all(|&f| f == e || edges.contains(f)))
        .count()
}

fn require_free(edges: &EdgeSet) -> Result<()> {
    let v = is_c4_free(edges);
    match v.first_violation {
        None => Ok(()),
        Some(first_violation) => Err(Error::NotC4Free {
            first_violation,
            violations: v.violations,
        }),
    }
}

/// True iff every non-edge would complete at least one cycle.
///
/// Only defined for C4-free inputs.
pub fn is_locally_maximal(edges: &EdgeSet) -> Result<bool> {
    require_free(edges)?;
    Ok(edges.non_edges().all(|e| created_unchecked(edges, e) >= 1))
}

/// For each `k` in `0..n`, how many non-edges would complete exactly `k` cycles.
///
/// Every key is present, including those with zero count.
pub fn nonedge_creation_histogram(edges: &EdgeSet) -> Result<BTreeMap<usize, usize>> {
    require_free(edges)?;
    let mut hist: BTreeMap<usize, usize> = (0..=edges.dim().cycles_per_edge())
        .map(|k| (k, 0))
        .collect();
    for e in edges.non_edges() {
        *hist.entry(created_unchecked(edges, e)).or_default() += 1;
    }
    Ok(hist)
}
