//! Runs a penalty campaign with the default parameter ranges and prints
//! one line per trial.
//!
//! `cargo run --release --example campaign -- <n> <trials> <seed> [steps_lo steps_hi [batch]]`
//!
//! With `batch` equal to `trials` every trial starts from the empty set.

use std::time::Instant;

use c4free::search::{run_campaign, CampaignConfig, Interval};

fn main() {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().unwrap())
        .collect();
    let n = args.first().copied().unwrap_or(6) as u32;
    let mut config = CampaignConfig {
        n,
        trials: args.get(1).copied().unwrap_or(10) as usize,
        seed: args.get(2).copied().unwrap_or(0),
        ..Default::default()
    };
    if let (Some(&lo), Some(&hi)) = (args.get(3), args.get(4)) {
        config.steps = Interval::new(lo, hi);
    }
    if let Some(&batch) = args.get(5) {
        config.batch = batch as usize;
    }
    let start = Instant::now();
    let result = run_campaign(&config, None).unwrap();
    for t in &result.trials {
        println!(
            "trial {:3} m={:4} V={} lambda={:.2} t0={:.2} t1={:.3} steps={}",
            t.trial,
            t.edges,
            t.violations,
            t.anneal.lambda,
            t.anneal.t0,
            t.anneal.t1,
            t.anneal.steps
        );
    }
    println!(
        "best {} edges, {} distinct solutions, {:.1?}",
        result.incumbent.len(),
        result.corpus.len(),
        start.elapsed()
    );
}
