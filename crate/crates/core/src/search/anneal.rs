use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_pcg::Pcg64Mcg;
use serde::{Deserialize, Serialize};

use super::SearchState;
use crate::cube::{Dim, EdgeId, EdgeSet, Hypercube};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Phase {
    /// Single-edge toggles minimising `-|E| + λV`.
    Penalty,
    /// Fixed edge count, swap moves minimising `V`.
    Swap,
}

/// Parameters of a single annealing run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SAConfig {
    pub n: u32,
    pub lambda: f64,
    pub t0: f64,
    pub t1: f64,
    pub steps: u64,
    pub phase: Phase,
    /// Edge count held fixed by the swap phase.
    pub target_edges: Option<usize>,
    pub seed: u64,
}

impl SAConfig {
    pub fn penalty(n: u32, seed: u64) -> Self {
        SAConfig {
            n,
            lambda: 0.6,
            t0: 1.0,
            t1: 0.01,
            steps: 1_000_000,
            phase: Phase::Penalty,
            target_edges: None,
            seed,
        }
    }

    pub fn swap(n: u32, target_edges: usize, seed: u64) -> Self {
        SAConfig {
            phase: Phase::Swap,
            target_edges: Some(target_edges),
            ..Self::penalty(n, seed)
        }
    }

    pub fn validate(&self) -> Result<Dim> {
        let dim = Dim::new(self.n)?;
        let bad = |msg: String| Err(Error::InvalidArgument(msg));
        if !(self.t1 > 0.0 && self.t0 > self.t1 && self.t0.is_finite()) {
            return bad(format!(
                "need t0 > t1 > 0, got t0={} t1={}",
                self.t0, self.t1
            ));
        }
        if !(self.lambda.is_finite() && self.lambda > 0.0) {
            return bad(format!(
                "penalty weight must be positive, got {}",
                self.lambda
            ));
        }
        if self.steps == 0 {
            return bad("steps must be at least 1".into());
        }
        if self.phase == Phase::Swap {
            match self.target_edges {
                Some(m) if m >= 1 && m < dim.edge_count() => {}
                Some(m) => return bad(format!("swap target {m} outside 1..{}", dim.edge_count())),
                None => return bad("swap phase needs target_edges".into()),
            }
        }
        Ok(dim)
    }
}

/// Counters collected over one run.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct TraceSummary {
    pub steps: u64,
    pub accepted: u64,
    pub initial_objective: f64,
    pub final_objective: f64,
    pub final_edges: usize,
    pub final_violations: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchResult {
    pub best: EdgeSet,
    pub best_violations: usize,
    pub best_edges: usize,
    /// Step after which the best state was first reached (0 = initial state).
    pub best_step: u64,
    pub seed: u64,
    pub trace: TraceSummary,
}

/// Per-step geometric cooling from `t0` to `t1`, logging once per decade.
struct Schedule {
    t: f64,
    ratio: f64,
    next_log: f64,
}

impl Schedule {
    fn new(t0: f64, t1: f64, steps: u64) -> Self {
        Schedule {
            t: t0,
            ratio: (t1 / t0).powf(1.0 / steps as f64),
            next_log: decade_below(t0),
        }
    }

    #[inline]
    fn advance(&mut self) -> bool {
        self.t *= self.ratio;
        if self.t <= self.next_log {
            self.next_log /= 10.0;
            true
        } else {
            false
        }
    }
}

fn decade_below(t: f64) -> f64 {
    let p = 10f64.powf(t.log10().floor());
    if p >= t {
        p / 10.0
    } else {
        p
    }
}

#[inline]
fn metropolis<R: Rng>(rng: &mut R, delta: f64, t: f64) -> bool {
    delta <= 0.0 || rng.gen::<f64>() < (-delta / t).exp()
}

/// Incumbent ordering: C4-free first, then more edges, then lower objective.
#[inline]
fn improves(v: usize, m: usize, f: f64, best_v: usize, best_m: usize, best_f: f64) -> bool {
    match (v == 0, best_v == 0) {
        (true, false) => true,
        (false, true) => false,
        _ => m > best_m || (m == best_m && f < best_f),
    }
}

/// Phase 1 from the empty set.
pub fn penalty_anneal(config: &SAConfig) -> Result<SearchResult> {
    let dim = config.validate()?;
    let cube = Arc::new(Hypercube::from_dim(dim));
    penalty_anneal_from(&cube, config, EdgeSet::empty(dim))
}

/// Phase 1: Metropolis single-edge toggles on `f(E) = -|E| + λV`.
pub fn penalty_anneal_from(
    cube: &Arc<Hypercube>,
    config: &SAConfig,
    init: EdgeSet,
) -> Result<SearchResult> {
    let dim = config.validate()?;
    if config.phase != Phase::Penalty {
        return Err(Error::InvalidArgument(
            "penalty_anneal needs the penalty phase".into(),
        ));
    }
    let mut rng = Pcg64Mcg::seed_from_u64(config.seed);
    let mut state = SearchState::new(cube.clone(), init)?;
    let lambda = config.lambda;
    let objective = |m: usize, v: usize| -(m as f64) + lambda * v as f64;

    let mut f = objective(state.edge_count(), state.violations());
    let initial_objective = f;
    let mut best = state.edges().clone();
    let (mut best_v, mut best_m, mut best_f, mut best_step) =
        (state.violations(), state.edge_count(), f, 0);
    let mut accepted = 0;
    let mut schedule = Schedule::new(config.t0, config.t1, config.steps);
    let edge_count = dim.edge_count() as u32;

    for step in 1..=config.steps {
        let e = EdgeId::new(rng.gen_range(0..edge_count));
        let dv = state.toggle_delta(e);
        let dm = if state.edges().contains(e) { -1.0 } else { 1.0 };
        let df = -dm + lambda * dv as f64;
        if metropolis(&mut rng, df, schedule.t) {
            state.apply_toggle(e);
            f += df;
            accepted += 1;
            let (v, m) = (state.violations(), state.edge_count());
            if improves(v, m, f, best_v, best_m, best_f) {
                best.clone_from(state.edges());
                (best_v, best_m, best_f, best_step) = (v, m, f, step);
            }
        }
        if schedule.advance() {
            log::info!(
                "{dim} penalty seed={} step={step} T={:.1e} m={} V={} best m={} V={}",
                config.seed,
                schedule.t,
                state.edge_count(),
                state.violations(),
                best_m,
                best_v
            );
        }
    }

    Ok(SearchResult {
        best,
        best_violations: best_v,
        best_edges: best_m,
        best_step,
        seed: config.seed,
        trace: TraceSummary {
            steps: config.steps,
            accepted,
            initial_objective,
            final_objective: objective(state.edge_count(), state.violations()),
            final_edges: state.edge_count(),
            final_violations: state.violations(),
        },
    })
}

/// Phase 2: Metropolis swap moves on `V` at fixed edge count.
///
/// Stops early once `V` reaches zero.
pub fn swap_anneal(config: &SAConfig, init: EdgeSet) -> Result<SearchResult> {
    let dim = config.validate()?;
    let cube = Arc::new(Hypercube::from_dim(dim));
    swap_anneal_from(&cube, config, init)
}

pub fn swap_anneal_from(
    cube: &Arc<Hypercube>,
    config: &SAConfig,
    init: EdgeSet,
) -> Result<SearchResult> {
    let dim = config.validate()?;
    let target = match (config.phase, config.target_edges) {
        (Phase::Swap, Some(m)) => m,
        _ => {
            return Err(Error::InvalidArgument(
                "swap_anneal needs the swap phase".into(),
            ))
        }
    };
    if init.len() != target {
        return Err(Error::InvalidInit {
            expected: target,
            actual: init.len(),
        });
    }
    let mut rng = Pcg64Mcg::seed_from_u64(config.seed);
    let mut state = SearchState::new(cube.clone(), init)?;

    let initial_objective = state.violations() as f64;
    let mut best = state.edges().clone();
    let (mut best_v, mut best_step) = (state.violations(), 0);
    let mut accepted = 0;
    let mut steps = 0;
    let mut schedule = Schedule::new(config.t0, config.t1, config.steps);

    while best_v > 0 && steps < config.steps {
        steps += 1;
        let (Some(out), Some(inn)) = (
            state.random_present(&mut rng),
            state.random_absent(&mut rng),
        ) else {
            break;
        };
        let dv = state.swap_delta_unchecked(out, inn);
        if metropolis(&mut rng, dv as f64, schedule.t) {
            state.apply_swap(out, inn)?;
            accepted += 1;
            if state.violations() < best_v {
                best.clone_from(state.edges());
                (best_v, best_step) = (state.violations(), steps);
            }
        }
        if schedule.advance() {
            log::info!(
                "{dim} swap seed={} step={steps} T={:.1e} V={} best V={best_v}",
                config.seed,
                schedule.t,
                state.violations()
            );
        }
    }

    Ok(SearchResult {
        best,
        best_violations: best_v,
        best_edges: target,
        best_step,
        seed: config.seed,
        trace: TraceSummary {
            steps,
            accepted,
            initial_objective,
            final_objective: state.violations() as f64,
            final_edges: state.edge_count(),
            final_violations: state.violations(),
        },
    })
}
