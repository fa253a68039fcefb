use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cube::EdgeSet;
use crate::error::{Error, Result};

/// Degree of every vertex, isolated ones included.
pub fn degrees(edges: &EdgeSet) -> Vec<usize> {
    let dim = edges.dim();
    let mut deg = vec![0usize; dim.vertex_count()];
    for e in edges.iter() {
        let (u, v) = dim.endpoints(e);
        deg[u as usize] += 1;
        deg[v as usize] += 1;
    }
    deg
}

/// Degree → number of vertices with that degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeSequence(pub BTreeMap<usize, usize>);

impl DegreeSequence {
    pub fn degree_sum(&self) -> usize {
        self.0.iter().map(|(d, c)| d * c).sum()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.0.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.0.keys().next_back().copied()
    }
}

pub fn degree_sequence(edges: &EdgeSet) -> DegreeSequence {
    let mut counts = BTreeMap::new();
    for d in degrees(edges) {
        *counts.entry(d).or_default() += 1;
    }
    DegreeSequence(counts)
}

/// Per-direction edge counts and their descending sort.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DimensionProfile {
    pub raw: Vec<usize>,
    pub sorted: Vec<usize>,
}

pub fn dimension_profile(edges: &EdgeSet) -> DimensionProfile {
    let dim = edges.dim();
    let mut raw = vec![0usize; dim.n() as usize];
    for e in edges.iter() {
        raw[dim.edge_direction(e) as usize] += 1;
    }
    let mut sorted = raw.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    DimensionProfile { raw, sorted }
}

/// Shannon entropy, in bits, of a profile normalised to sum to one.
pub fn profile_entropy(profile: &[usize]) -> Result<f64> {
    let total: usize = profile.iter().sum();
    if total == 0 {
        return Err(Error::UndefinedEntropy);
    }
    let total = total as f64;
    Ok(-profile
        .iter()
        .filter(|&&e| e > 0)
        .map(|&e| {
            let p = e as f64 / total;
            p * p.log2()
        })
        .sum::<f64>())
}

/// `½(n + 0.9√n)·2^(n−1)`.
pub fn bhn_estimate(n: u32) -> f64 {
    let nf = n as f64;
    0.5 * (nf + 0.9 * nf.sqrt()) * 2f64.powi(n as i32 - 1)
}
