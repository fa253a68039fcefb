//! Two-phase simulated annealing with incremental evaluation.
//!
//! Phase 1 toggles single edges under the penalty objective `-|E| + λV`;
//! phase 2 holds `|E|` fixed and swaps a present edge for an absent one to
//! drive `V` to zero. Campaigns chain trials, restarting each one from a
//! random automorphic image of the incumbent.

mod anneal;
mod campaign;
mod state;

pub use anneal::{
    penalty_anneal, penalty_anneal_from, swap_anneal, swap_anneal_from, Phase, SAConfig,
    SearchResult, TraceSummary,
};
pub use campaign::{
    run_campaign, CampaignConfig, CampaignResult, Corpus, Interval, SolutionRecord, TrialSummary,
};
pub use state::SearchState;
