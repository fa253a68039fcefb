//! Command-line front end: `c4free <subcommand>`.
//!
//! Exit codes: 0 success (or C4-free), 1 violation found (or `V > 0` at the
//! search target), 2 usage error, 3 I/O or validation error.

pub mod error;
pub mod run_dir;
pub mod solution_file;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use c4free::analyze::{barrier_report, corpus_report, distance_stats, report};
use c4free::cube::Dim;
use c4free::exact::exact_max;
use c4free::ilp::{build_ilp, parse_solution_value, write_mps};
use c4free::search::{run_campaign, CampaignConfig, Interval, Phase};
use c4free::verify::is_c4_free;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::error::{exit, CliError};
use crate::run_dir::{load_inputs, write_run};
use crate::solution_file::read_solution;

/// Environment variable holding the worker-thread count for campaigns.
pub const THREADS_ENV: &str = "C4FREE_THREADS";

#[derive(Debug, Parser)]
#[command(name = "c4free", version, about = "C4-free subgraphs of hypercubes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct DimArg {
    /// Hypercube dimension.
    #[arg(long, short)]
    pub n: u32,
}

impl DimArg {
    fn dim(&self) -> Result<Dim, CliError> {
        Dim::new(self.n).map_err(|e| CliError::Usage(e.to_string()))
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum PhaseArg {
    Penalty,
    Swap,
}

#[derive(Debug, Subcommand)]
#[allow(clippy::large_enum_variant)]
pub enum Command {
    /// Print vertex, edge and four-cycle counts (and optionally every cycle).
    Enumerate {
        #[command(flatten)]
        dim: DimArg,
        /// Also list every cycle in canonical order.
        #[arg(long)]
        list: bool,
    },
    /// Certify a solution file; exits 0 iff it is C4-free.
    Verify {
        #[command(flatten)]
        dim: DimArg,
        file: PathBuf,
    },
    /// Run an annealing campaign and write a run directory.
    Search(SearchArgs),
    /// Exact optimum by branch-and-bound (small n only).
    Exact {
        #[command(flatten)]
        dim: DimArg,
        #[arg(long, default_value_t = 1_000_000_000)]
        node_limit: u64,
        /// Write the witness as JSONL.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the 0/1 program as free-format MPS.
    Ilp {
        #[command(flatten)]
        dim: DimArg,
        #[arg(long)]
        out: PathBuf,
        /// File holding an external solver's optimal objective (one integer).
        #[arg(long)]
        solution_value: Option<PathBuf>,
    },
    /// Full structural report of one solution.
    Analyze {
        #[command(flatten)]
        dim: DimArg,
        file: PathBuf,
    },
    /// Dimension-profile classification of a corpus.
    Classify {
        #[command(flatten)]
        dim: DimArg,
        /// Run directories and/or solution files.
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        /// Keep only solutions with this many edges (default: the largest).
        #[arg(long)]
        edges: Option<usize>,
        #[arg(long, default_value_t = 5000)]
        pairs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Pairwise Hamming-distance statistics of a corpus.
    Distances {
        #[command(flatten)]
        dim: DimArg,
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[arg(long, default_value_t = 5000)]
        pairs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Non-edge histogram and swap searches one edge beyond a solution.
    Barrier {
        #[command(flatten)]
        dim: DimArg,
        file: PathBuf,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 5_000_000)]
        steps: u64,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long, short)]
    pub n: Option<u32>,
    /// JSON file with campaign settings; flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Output run directory.
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long, value_enum)]
    pub phase: Option<PhaseArg>,
    /// Fixed edge count for the swap phase.
    #[arg(long)]
    pub target: Option<usize>,
    /// Starting edge set for the first trial.
    #[arg(long)]
    pub init: Option<PathBuf>,
    #[arg(long)]
    pub steps_min: Option<u64>,
    #[arg(long)]
    pub steps_max: Option<u64>,
    #[arg(long)]
    pub lambda_min: Option<f64>,
    #[arg(long)]
    pub lambda_max: Option<f64>,
    #[arg(long)]
    pub t0_min: Option<f64>,
    #[arg(long)]
    pub t0_max: Option<f64>,
    #[arg(long)]
    pub t1_min: Option<f64>,
    #[arg(long)]
    pub t1_max: Option<f64>,
    /// Trials per batch (trials in a batch may run in parallel).
    #[arg(long)]
    pub batch: Option<usize>,
    /// Stop once a C4-free set of this size is found.
    #[arg(long)]
    pub stop_at: Option<usize>,
}

fn overlay<T: Copy + PartialOrd>(iv: &mut Interval<T>, lo: Option<T>, hi: Option<T>) {
    if let Some(lo) = lo {
        iv.lo = lo;
        if iv.hi < lo {
            iv.hi = lo;
        }
    }
    if let Some(hi) = hi {
        iv.hi = hi;
        if lo.is_none() && iv.lo > hi {
            iv.lo = hi;
        }
    }
}

impl SearchArgs {
    /// Defaults, then the config file, then flags.
    pub fn campaign_config(&self) -> Result<(CampaignConfig, bool), CliError> {
        let mut config = match &self.config {
            Some(path) => {
                let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
                serde_json::from_str(&text).map_err(|e| CliError::Parse {
                    origin: path.display().to_string(),
                    line: e.line(),
                    message: e.to_string(),
                })?
            }
            None => CampaignConfig::default(),
        };
        let mut seed_given = self.config.is_some();
        if let Some(n) = self.n {
            config.n = n;
        } else if self.config.is_none() {
            return Err(CliError::Usage("search needs --n or --config".into()));
        }
        if let Some(seed) = self.seed {
            config.seed = seed;
            seed_given = true;
        }
        if let Some(t) = self.trials {
            config.trials = t;
        }
        if let Some(p) = self.phase {
            config.phase = match p {
                PhaseArg::Penalty => Phase::Penalty,
                PhaseArg::Swap => Phase::Swap,
            };
        }
        if self.target.is_some() {
            config.target_edges = self.target;
        }
        if let Some(b) = self.batch {
            config.batch = b;
        }
        if self.stop_at.is_some() {
            config.stop_at_edges = self.stop_at;
        }
        overlay(&mut config.steps, self.steps_min, self.steps_max);
        overlay(&mut config.lambda, self.lambda_min, self.lambda_max);
        overlay(&mut config.t0, self.t0_min, self.t0_max);
        overlay(&mut config.t1, self.t1_min, self.t1_max);
        config
            .validate()
            .map_err(|e| CliError::Usage(e.to_string()))?;
        Ok((config, seed_given))
    }
}

fn fresh_seed() -> u64 {
    use std::collections::hash_map::RandomState;
    use std::hash::{BuildHasher, Hasher};
    let mut h = RandomState::new().build_hasher();
    h.write_u128(
        std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map_or(0, |d| d.as_nanos()),
    );
    h.finish()
}

fn print_json<W: Write, T: Serialize>(out: &mut W, value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).expect("report serialises");
    writeln!(out, "{text}").map_err(|e| CliError::io(Path::new("<stdout>"), e))
}

fn configure_threads() {
    if let Some(k) = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        // fails only if the global pool already exists
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global();
    }
}

/// Runs one command, writing reports to `out`; returns the exit code.
pub fn execute<W: Write>(command: Command, out: &mut W) -> Result<i32, CliError> {
    match command {
        Command::Enumerate { dim, list } => {
            let d = dim.dim()?;
            let mut value = json!({
                "n": d.n(),
                "vertices": d.vertex_count(),
                "edges": d.edge_count(),
                "cycles": d.c4_count(),
            });
            if list {
                let cycles: Vec<_> = d
                    .cycles()
                    .map(|c| {
                        json!({
                            "id": c.id,
                            "directions": [c.i, c.j],
                            "base": c.base,
                            "vertices": c.vertices,
                            "edges": c.edges,
                        })
                    })
                    .collect();
                value["cycle_list"] = json!(cycles);
            }
            print_json(out, &value)?;
            Ok(exit::SUCCESS)
        }
        Command::Verify { dim, file } => {
            let edges = read_solution(&file, dim.dim()?)?;
            let verdict = is_c4_free(&edges);
            eprintln!(
                "{} cycles checked, {} violations",
                verdict.cycles_checked, verdict.violations
            );
            print_json(
                out,
                &json!({
                    "n": dim.n,
                    "edges": edges.len(),
                    "cycles_checked": verdict.cycles_checked,
                    "violations": verdict.violations,
                    "first_violation": verdict.first_violation,
                    "free": verdict.free,
                }),
            )?;
            Ok(if verdict.free {
                exit::SUCCESS
            } else {
                exit::VIOLATION
            })
        }
        Command::Search(args) => {
            let (mut config, seed_given) = args.campaign_config()?;
            if !seed_given {
                config.seed = fresh_seed();
                eprintln!("seed: {}", config.seed);
            }
            let dim = Dim::new(config.n)?;
            let init = args
                .init
                .as_deref()
                .map(|p| read_solution(p, dim))
                .transpose()?;
            configure_threads();
            let result = run_campaign(&config, init)?;
            let manifest = write_run(&args.out, &config, &result)?;
            print_json(
                out,
                &json!({
                    "n": config.n,
                    "seed": config.seed,
                    "out": args.out.display().to_string(),
                    "trials": manifest.trials.len(),
                    "solutions": manifest.solutions.len(),
                    "best_edges": manifest.best.edges,
                    "best_violations": manifest.best.violations,
                }),
            )?;
            Ok(if result.incumbent_violations == 0 {
                exit::SUCCESS
            } else {
                exit::VIOLATION
            })
        }
        Command::Exact {
            dim,
            node_limit,
            out: witness_path,
        } => {
            let r = exact_max(dim.dim()?.n(), node_limit)?;
            if let Some(path) = &witness_path {
                solution_file::write_solution(&r.witness, path)?;
            }
            print_json(out, &r)?;
            Ok(exit::SUCCESS)
        }
        Command::Ilp {
            dim,
            out: path,
            solution_value,
        } => {
            let model = build_ilp(dim.dim()?.n())?;
            let file = fs::File::create(&path).map_err(|e| CliError::io(&path, e))?;
            write_mps(&model, io::BufWriter::new(file)).map_err(|e| CliError::io(&path, e))?;
            let mut value = json!({
                "n": dim.n,
                "variables": model.variable_count(),
                "constraints": model.constraint_count(),
                "out": path.display().to_string(),
            });
            let mut code = exit::SUCCESS;
            if let Some(vpath) = solution_value {
                let text = fs::read_to_string(&vpath).map_err(|e| CliError::io(&vpath, e))?;
                let solver = parse_solution_value(&text)
                    .map_err(|e| CliError::Validation(format!("{}: {e}", vpath.display())))?;
                value["solver_optimum"] = json!(solver);
                if dim.n <= 4 {
                    let exact = exact_max(dim.n, u64::MAX)?;
                    let agrees = exact.optimum as i64 == solver;
                    value["exact_optimum"] = json!(exact.optimum);
                    value["agrees"] = json!(agrees);
                    if !agrees {
                        code = exit::VIOLATION;
                    }
                }
            }
            print_json(out, &value)?;
            Ok(code)
        }
        Command::Analyze { dim, file } => {
            let edges = read_solution(&file, dim.dim()?)?;
            let r = report(&edges)?;
            print_json(out, &r)?;
            Ok(if r.free {
                exit::SUCCESS
            } else {
                exit::VIOLATION
            })
        }
        Command::Classify {
            dim,
            inputs,
            edges,
            pairs,
            seed,
        } => {
            let mut corpus = load_inputs(&inputs, dim.dim()?)?;
            let target = edges.or_else(|| corpus.iter().map(|s| s.len()).max());
            corpus.retain(|s| Some(s.len()) == target);
            if corpus.is_empty() {
                return Err(CliError::Validation("no solutions to classify".into()));
            }
            let r = corpus_report(&corpus, pairs, seed)?;
            print_json(out, &r)?;
            Ok(if r.all_free {
                exit::SUCCESS
            } else {
                exit::VIOLATION
            })
        }
        Command::Distances {
            dim,
            inputs,
            pairs,
            seed,
        } => {
            let corpus = load_inputs(&inputs, dim.dim()?)?;
            let stats = distance_stats(&corpus, pairs, seed)
                .map_err(|e| CliError::Validation(e.to_string()))?;
            print_json(out, &stats)?;
            Ok(exit::SUCCESS)
        }
        Command::Barrier {
            dim,
            file,
            trials,
            steps,
            seed,
        } => {
            let edges = read_solution(&file, dim.dim()?)?;
            let verdict = is_c4_free(&edges);
            if !verdict.free {
                eprintln!(
                    "{} is not C4-free ({} violations)",
                    file.display(),
                    verdict.violations
                );
                return Ok(exit::VIOLATION);
            }
            let seed = seed.unwrap_or_else(|| {
                let s = fresh_seed();
                eprintln!("seed: {s}");
                s
            });
            configure_threads();
            let r = barrier_report(&edges, trials, steps, seed)?;
            print_json(out, &r)?;
            Ok(exit::SUCCESS)
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T, W>(args: I, out: &mut W) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    exit::SUCCESS
                }
                _ => exit::USAGE,
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
