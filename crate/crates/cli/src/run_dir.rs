//! Run directories written by `search`.
//!
//! ```text
//! <root>/manifest.json
//! <root>/best.jsonl
//! <root>/solutions/trial_00003_m132.jsonl
//! ```
//!
//! Nothing time- or host-dependent is written, so the same configuration and
//! seed reproduce the directory byte for byte.

use std::fs;
use std::path::{Path, PathBuf};

use c4free::search::{CampaignConfig, CampaignResult, TrialSummary};
use c4free::{Dim, EdgeSet};
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::solution_file::{read_solution, write_solution};

pub const MANIFEST: &str = "manifest.json";
pub const BEST: &str = "best.jsonl";
pub const SOLUTIONS: &str = "solutions";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StoredSolution {
    /// Relative to the run directory.
    pub file: String,
    pub trial: usize,
    pub seed: u64,
    pub edges: usize,
    pub violations: usize,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub n: u32,
    pub config: CampaignConfig,
    pub best: StoredSolution,
    pub solutions: Vec<StoredSolution>,
    pub trials: Vec<TrialSummary>,
}

fn solution_name(trial: usize, edges: usize) -> String {
    format!("{SOLUTIONS}/trial_{trial:05}_m{edges}.jsonl")
}

pub fn write_run(
    root: &Path,
    config: &CampaignConfig,
    result: &CampaignResult,
) -> Result<Manifest, CliError> {
    fs::create_dir_all(root.join(SOLUTIONS)).map_err(|e| CliError::io(root, e))?;
    let mut solutions = Vec::new();
    for rec in result.corpus.records() {
        let file = solution_name(rec.trial, rec.edges.len());
        write_solution(&rec.edges, &root.join(&file))?;
        solutions.push(StoredSolution {
            file,
            trial: rec.trial,
            seed: rec.trial_seed,
            edges: rec.edges.len(),
            violations: rec.violations,
            verified: rec.verified,
        });
    }
    write_solution(&result.incumbent, &root.join(BEST))?;
    let best_trial = result
        .trials
        .iter()
        .find(|t| t.edges == result.incumbent.len() && t.violations == result.incumbent_violations)
        .map_or(0, |t| t.trial);
    let manifest = Manifest {
        n: config.n,
        config: config.clone(),
        best: StoredSolution {
            file: BEST.to_string(),
            trial: best_trial,
            seed: config.trial_seed(best_trial),
            edges: result.incumbent.len(),
            violations: result.incumbent_violations,
            verified: result.incumbent_violations == 0,
        },
        solutions,
        trials: result.trials.clone(),
    };
    let path = root.join(MANIFEST);
    let mut text = serde_json::to_string_pretty(&manifest).expect("manifest serialises");
    text.push('\n');
    fs::write(&path, text).map_err(|e| CliError::io(&path, e))?;
    Ok(manifest)
}

pub fn read_manifest(root: &Path) -> Result<Manifest, CliError> {
    let path = root.join(MANIFEST);
    let text = fs::read_to_string(&path).map_err(|e| CliError::io(&path, e))?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse {
        origin: path.display().to_string(),
        line: e.line(),
        message: e.to_string(),
    })
}

/// Loads solutions from run directories and/or individual JSONL files.
pub fn load_inputs(inputs: &[PathBuf], dim: Dim) -> Result<Vec<EdgeSet>, CliError> {
    let mut out = Vec::new();
    for input in inputs {
        if input.is_dir() {
            let manifest = read_manifest(input)?;
            if manifest.n != dim.n() {
                return Err(CliError::Validation(format!(
                    "{} holds Q_{} solutions, expected Q_{}",
                    input.display(),
                    manifest.n,
                    dim.n()
                )));
            }
            for s in &manifest.solutions {
                out.push(read_solution(&input.join(&s.file), dim)?);
            }
        } else {
            out.push(read_solution(input, dim)?);
        }
    }
    Ok(out)
}
