use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::classify::{check_uniform, classify_corpus, ProfileType};
use super::landscape::{distance_stats, DistanceStats};
use super::spectrum::{spectrum, SpectrumSummary, DEFAULT_TOLERANCE};
use super::structure::{
    bhn_estimate, degree_sequence, dimension_profile, profile_entropy, DegreeSequence,
};
use super::trace::{trace_a4, trace_formula};
use crate::cube::{EdgeId, EdgeSet};
use crate::error::Result;
use crate::search::{run_campaign, CampaignConfig, Interval, Phase};
use crate::verify::{c4s_created_by_adding, is_c4_free, nonedge_creation_histogram};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BhnComparison {
    pub estimate: f64,
    pub delta: f64,
    pub relative_percent: f64,
}

impl BhnComparison {
    pub fn new(n: u32, edges: usize) -> Self {
        let estimate = bhn_estimate(n);
        let delta = edges as f64 - estimate;
        BhnComparison {
            estimate,
            delta,
            relative_percent: 100.0 * delta / estimate,
        }
    }
}

/// Every invariant of a single edge set.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolutionReport {
    pub n: u32,
    pub edges: usize,
    pub host_edges: usize,
    pub density: f64,
    pub cycles_checked: usize,
    pub free: bool,
    pub first_violation: Option<usize>,
    pub violations: usize,
    /// Only defined for C4-free sets.
    pub locally_maximal: Option<bool>,
    pub nonedge_histogram: Option<BTreeMap<usize, usize>>,
    pub degrees: DegreeSequence,
    pub min_degree: Option<usize>,
    pub max_degree: Option<usize>,
    /// Whether every degree lies in `{n−3, n−2, n−1}`.
    pub degree_support_top_three: bool,
    pub profile_raw: Vec<usize>,
    pub profile: Vec<usize>,
    pub profile_entropy: Option<f64>,
    pub spectrum: Option<SpectrumSummary>,
    pub trace_a4: u64,
    pub trace_formula: u64,
    pub trace_equality: bool,
    pub bhn: BhnComparison,
}

pub fn report(edges: &EdgeSet) -> Result<SolutionReport> {
    let dim = edges.dim();
    let n = dim.n();
    let verdict = is_c4_free(edges);
    let histogram = verdict
        .free
        .then(|| nonedge_creation_histogram(edges))
        .transpose()?;
    let locally_maximal = histogram
        .as_ref()
        .map(|h| h.get(&0).copied().unwrap_or(0) == 0);
    let degrees = degree_sequence(edges);
    let profile = dimension_profile(edges);
    let entropy = (!edges.is_empty())
        .then(|| profile_entropy(&profile.sorted))
        .transpose()?;
    let spec = (!edges.is_empty())
        .then(|| spectrum(edges, DEFAULT_TOLERANCE))
        .transpose()?;
    let (ta4, tf) = (trace_a4(edges), trace_formula(edges));
    let lo = n.saturating_sub(3) as usize;
    Ok(SolutionReport {
        n,
        edges: edges.len(),
        host_edges: dim.edge_count(),
        density: edges.len() as f64 / dim.edge_count() as f64,
        cycles_checked: verdict.cycles_checked,
        free: verdict.free,
        first_violation: verdict.first_violation,
        violations: verdict.violations,
        locally_maximal,
        nonedge_histogram: histogram,
        min_degree: degrees.min_degree(),
        max_degree: degrees.max_degree(),
        degree_support_top_three: degrees.0.keys().all(|&d| (lo..n as usize).contains(&d)),
        degrees,
        profile_raw: profile.raw,
        profile: profile.sorted,
        profile_entropy: entropy,
        spectrum: spec,
        trace_a4: ta4,
        trace_formula: tf,
        trace_equality: ta4 == tf,
        bhn: BhnComparison::new(n, edges.len()),
    })
}

/// Statistics over a set of same-size solutions.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorpusReport {
    pub n: u32,
    pub size: usize,
    pub edges: usize,
    pub all_free: bool,
    pub all_locally_maximal: bool,
    pub types: Vec<ProfileType>,
    /// Distinct degree sequences and how many solutions have each.
    pub degree_sequences: Vec<(DegreeSequence, usize)>,
    /// Host edges that appear in at least one solution.
    pub edge_coverage: usize,
    pub distances: Option<DistanceStats>,
    pub bhn: BhnComparison,
}

pub fn corpus_report(corpus: &[EdgeSet], sample_pairs: usize, seed: u64) -> Result<CorpusReport> {
    check_uniform(corpus)?;
    let dim = corpus[0].dim();
    let types = classify_corpus(corpus)?;
    let mut all_free = true;
    let mut all_locally_maximal = true;
    let mut seqs: BTreeMap<DegreeSequence, usize> = BTreeMap::new();
    let mut covered = EdgeSet::empty(dim);
    for s in corpus {
        let verdict = is_c4_free(s);
        all_free &= verdict.free;
        if verdict.free {
            let h = nonedge_creation_histogram(s)?;
            all_locally_maximal &= h.get(&0).copied().unwrap_or(0) == 0;
        } else {
            all_locally_maximal = false;
        }
        *seqs.entry(degree_sequence(s)).or_default() += 1;
        for e in s.iter() {
            covered.insert(e);
        }
    }
    let distances = (corpus.len() >= 2 && sample_pairs > 0)
        .then(|| distance_stats(corpus, sample_pairs, seed))
        .transpose()?;
    let mut degree_sequences: Vec<_> = seqs.into_iter().collect();
    degree_sequences.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    Ok(CorpusReport {
        n: dim.n(),
        size: corpus.len(),
        edges: corpus[0].len(),
        all_free,
        all_locally_maximal,
        types,
        degree_sequences,
        edge_coverage: covered.len(),
        distances,
        bhn: BhnComparison::new(dim.n(), corpus[0].len()),
    })
}

/// How hard it is to go one edge beyond a C4-free solution.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BarrierReport {
    pub n: u32,
    pub edges: usize,
    pub target_edges: usize,
    pub nonedges: usize,
    pub nonedge_histogram: BTreeMap<usize, usize>,
    /// The non-edge added to seed the swap search (fewest cycles created).
    pub seed_edge: Option<EdgeId>,
    /// Minimum `V` reached by each swap trial.
    pub trial_minima: Vec<usize>,
    pub floor: Option<usize>,
}

/// Non-edge histogram of `edges`, plus `trials` swap-phase searches at
/// `|edges| + 1` started from `edges` with its cheapest non-edge added.
pub fn barrier_report(
    edges: &EdgeSet,
    trials: usize,
    steps: u64,
    seed: u64,
) -> Result<BarrierReport> {
    let dim = edges.dim();
    let histogram = nonedge_creation_histogram(edges)?;
    let nonedges = dim.edge_count() - edges.len();
    let mut seed_edge = None;
    let mut fewest = usize::MAX;
    for e in edges.non_edges() {
        let k = c4s_created_by_adding(edges, e)?;
        if k < fewest {
            fewest = k;
            seed_edge = Some(e);
        }
    }
    let mut trial_minima = Vec::new();
    if let (Some(e), true) = (seed_edge, trials > 0) {
        let mut init = edges.clone();
        init.insert(e);
        let config = CampaignConfig {
            n: dim.n(),
            phase: Phase::Swap,
            trials,
            seed,
            steps: Interval::point(steps),
            t0: Interval::new(0.20, 1.00),
            t1: Interval::new(0.001, 0.030),
            target_edges: Some(init.len()),
            ..Default::default()
        };
        let result = run_campaign(&config, Some(init))?;
        trial_minima = result.trials.iter().map(|t| t.violations).collect();
    }
    Ok(BarrierReport {
        n: dim.n(),
        edges: edges.len(),
        target_edges: edges.len() + 1,
        nonedges,
        nonedge_histogram: histogram,
        seed_edge,
        floor: trial_minima.iter().min().copied(),
        trial_minima,
    })
}
