use std::collections::HashSet;
use std::ops::RangeInclusive;
use std::sync::Arc;

use rand::{seq::SliceRandom, Rng, SeedableRng};
use rand_pcg::Pcg64Mcg;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{penalty_anneal_from, swap_anneal_from, Phase, SAConfig, SearchResult};
use crate::cube::{apply_automorphism, Automorphism, Dim, EdgeSet, Hypercube};
use crate::error::{Error, Result};
use crate::verify::is_c4_free;

/// A closed interval sampled uniformly per trial.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Interval<T> {
    pub lo: T,
    pub hi: T,
}

impl<T: Copy + PartialOrd> Interval<T> {
    pub fn new(lo: T, hi: T) -> Self {
        Interval { lo, hi }
    }

    pub fn point(v: T) -> Self {
        Interval { lo: v, hi: v }
    }

    fn range(&self) -> RangeInclusive<T> {
        self.lo..=self.hi
    }
}

/// Settings for a multi-trial search with automorphism diversification.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct CampaignConfig {
    pub n: u32,
    pub phase: Phase,
    pub trials: usize,
    pub seed: u64,
    pub lambda: Interval<f64>,
    pub t0: Interval<f64>,
    pub t1: Interval<f64>,
    pub steps: Interval<u64>,
    /// Swap phase only: the fixed edge count.
    pub target_edges: Option<usize>,
    /// Trials per batch. Every trial in a batch restarts from the incumbent
    /// as it stood when the batch began, so results do not depend on how
    /// many worker threads execute the batch.
    pub batch: usize,
    /// Stop once a C4-free set with at least this many edges is recorded.
    pub stop_at_edges: Option<usize>,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            n: 6,
            phase: Phase::Penalty,
            trials: 10,
            seed: 0,
            lambda: Interval::new(0.30, 0.90),
            t0: Interval::new(0.20, 4.00),
            t1: Interval::new(0.001, 0.030),
            steps: Interval::new(3_000_000, 15_000_000),
            target_edges: None,
            batch: 1,
            stop_at_edges: None,
        }
    }
}

impl CampaignConfig {
    pub fn validate(&self) -> Result<Dim> {
        let dim = Dim::new(self.n)?;
        let bad = |msg: &str| Err(Error::InvalidArgument(msg.into()));
        if self.trials == 0 {
            return bad("trials must be at least 1");
        }
        if self.batch == 0 {
            return bad("batch must be at least 1");
        }
        if self.lambda.lo > self.lambda.hi || self.t0.lo > self.t0.hi || self.t1.lo > self.t1.hi {
            return bad("empty parameter interval");
        }
        if self.steps.lo > self.steps.hi || self.steps.lo == 0 {
            return bad("steps interval must be non-empty and positive");
        }
        if !(self.t1.lo > 0.0 && self.t0.lo > self.t1.hi) {
            return bad("temperature intervals must satisfy t0 > t1 > 0");
        }
        if self.lambda.lo.is_nan() || self.lambda.lo <= 0.0 {
            return bad("penalty weights must be positive");
        }
        if self.phase == Phase::Swap && self.target_edges.is_none() {
            return bad("swap campaigns need target_edges");
        }
        if self.target_edges.is_some_and(|m| m > dim.edge_count()) {
            return bad("target_edges exceeds the number of edges of Q_n");
        }
        Ok(dim)
    }

    /// Seed of trial `k` (0-based).
    pub fn trial_seed(&self, k: usize) -> u64 {
        self.seed ^ k as u64
    }
}

/// One stored solution together with how it was produced.
#[derive(Clone, Debug, PartialEq)]
pub struct SolutionRecord {
    pub n: u32,
    pub edges: EdgeSet,
    pub trial: usize,
    pub trial_seed: u64,
    pub phase: Phase,
    pub steps: u64,
    pub best_step: u64,
    pub violations: usize,
    pub verified: bool,
}

/// Solutions deduplicated by exact edge-set equality.
#[derive(Clone, Debug, Default)]
pub struct Corpus {
    records: Vec<SolutionRecord>,
    seen: HashSet<EdgeSet>,
}

impl Corpus {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns `false` if an identical edge set is already stored.
    pub fn insert(&mut self, record: SolutionRecord) -> bool {
        if !self.seen.insert(record.edges.clone()) {
            return false;
        }
        self.records.push(record);
        true
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn records(&self) -> &[SolutionRecord] {
        &self.records
    }

    pub fn into_records(self) -> Vec<SolutionRecord> {
        self.records
    }
}

/// What one trial did, for the run manifest.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialSummary {
    pub trial: usize,
    pub trial_seed: u64,
    pub anneal: SAConfig,
    pub restart: Option<Automorphism>,
    pub edges: usize,
    pub violations: usize,
    pub best_step: u64,
    pub accepted: u64,
    pub verified: bool,
    pub recorded: bool,
}

#[derive(Clone, Debug)]
pub struct CampaignResult {
    pub corpus: Corpus,
    pub trials: Vec<TrialSummary>,
    pub incumbent: EdgeSet,
    pub incumbent_violations: usize,
}

struct Trial {
    anneal: SAConfig,
    restart: Option<Automorphism>,
    result: SearchResult,
}

fn run_trial(
    cube: &Arc<Hypercube>,
    config: &CampaignConfig,
    k: usize,
    start: Option<&EdgeSet>,
) -> Result<Trial> {
    let dim = cube.dim();
    let trial_seed = config.trial_seed(k);
    let mut rng = Pcg64Mcg::seed_from_u64(trial_seed);
    let anneal = SAConfig {
        n: config.n,
        lambda: rng.gen_range(config.lambda.range()),
        t0: rng.gen_range(config.t0.range()),
        t1: rng.gen_range(config.t1.range()),
        steps: rng.gen_range(config.steps.range()),
        phase: config.phase,
        target_edges: config.target_edges,
        seed: rng.gen(),
    };
    let (init, restart) = match start {
        Some(incumbent) if k > 0 => {
            let a = Automorphism::random(dim, &mut rng);
            (apply_automorphism(&a, incumbent), Some(a))
        }
        Some(initial) => (initial.clone(), None),
        None => match (config.phase, config.target_edges) {
            (Phase::Swap, Some(m)) => {
                let mut all: Vec<_> = dim.edges().collect();
                let (chosen, _) = all.partial_shuffle(&mut rng, m);
                (EdgeSet::from_edges(dim, chosen.iter().copied())?, None)
            }
            _ => (EdgeSet::empty(dim), None),
        },
    };
    let result = match config.phase {
        Phase::Penalty => penalty_anneal_from(cube, &anneal, init)?,
        Phase::Swap => swap_anneal_from(cube, &anneal, init)?,
    };
    Ok(Trial {
        anneal,
        restart,
        result,
    })
}

#[inline]
fn better(a_v: usize, a_m: usize, b_v: usize, b_m: usize) -> bool {
    match (a_v == 0, b_v == 0) {
        (true, false) => true,
        (false, true) => false,
        _ => a_m > b_m || (a_m == b_m && a_v < b_v),
    }
}

/// Runs `config.trials` annealing trials.
///
/// Trial 0 starts from `init`, or without one from the empty set (penalty
/// phase) or a random set of `target_edges` edges (swap phase). Every later
/// trial starts from a random automorphic image of the best set found so
/// far. C4-free results are re-certified by a full scan before they are recorded.
pub fn run_campaign(config: &CampaignConfig, init: Option<EdgeSet>) -> Result<CampaignResult> {
    let dim = config.validate()?;
    if let Some(s) = &init {
        if s.dim() != dim {
            return Err(Error::DimensionMismatch {
                left: dim.n(),
                right: s.dim().n(),
            });
        }
    }
    let cube = Arc::new(Hypercube::from_dim(dim));
    let mut corpus = Corpus::new();
    let mut summaries = Vec::with_capacity(config.trials);
    let mut incumbent: Option<(EdgeSet, usize)> = None;
    let mut k = 0;

    while k < config.trials {
        let end = (k + config.batch).min(config.trials);
        let start = incumbent.as_ref().map(|(s, _)| s).or(init.as_ref());
        let trials: Vec<Result<Trial>> = (k..end)
            .into_par_iter()
            .map(|t| run_trial(&cube, config, t, start))
            .collect();

        let mut done = false;
        for (t, trial) in (k..end).zip(trials) {
            let Trial {
                anneal,
                restart,
                result,
            } = trial?;
            let verified = result.best_violations == 0 && is_c4_free(&result.best).free;
            if result.best_violations == 0 && !verified {
                return Err(Error::InvalidArgument(format!(
                    "trial {t} reported a C4-free result that fails certification"
                )));
            }
            let m = result.best.len();
            let recorded = verified
                && corpus.insert(SolutionRecord {
                    n: dim.n(),
                    edges: result.best.clone(),
                    trial: t,
                    trial_seed: config.trial_seed(t),
                    phase: config.phase,
                    steps: result.trace.steps,
                    best_step: result.best_step,
                    violations: 0,
                    verified,
                });
            log::info!(
                "{dim} trial {t}: m={m} V={} (incumbent {})",
                result.best_violations,
                incumbent.as_ref().map_or(0, |(s, _)| s.len())
            );
            summaries.push(TrialSummary {
                trial: t,
                trial_seed: config.trial_seed(t),
                anneal,
                restart,
                edges: m,
                violations: result.best_violations,
                best_step: result.best_step,
                accepted: result.trace.accepted,
                verified,
                recorded,
            });
            let improved = incumbent
                .as_ref()
                .is_none_or(|(s, v)| better(result.best_violations, m, *v, s.len()));
            if improved {
                incumbent = Some((result.best, result.best_violations));
            }
            if verified && config.stop_at_edges.is_some_and(|goal| m >= goal) {
                done = true;
            }
        }
        k = end;
        if done {
            break;
        }
    }

    let (incumbent, incumbent_violations) = incumbent.expect("at least one trial runs");
    Ok(CampaignResult {
        corpus,
        trials: summaries,
        incumbent,
        incumbent_violations,
    })
}
