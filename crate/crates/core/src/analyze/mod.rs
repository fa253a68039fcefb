//! Structural invariants of solutions and statistics over corpora of them.

mod classify;
mod landscape;
mod report;
mod spectrum;
mod structure;
mod trace;

pub use classify::{classify_corpus, ProfileType};
pub use landscape::{distance_stats, hamming, DistanceStats};
pub use report::{
    barrier_report, corpus_report, report, BarrierReport, BhnComparison, CorpusReport,
    SolutionReport,
};
pub use spectrum::{
    spectrum, spectrum_with, SpectrumSummary, DEFAULT_MAX_ITERATIONS, DEFAULT_TOLERANCE,
};
pub use structure::{
    bhn_estimate, degree_sequence, degrees, dimension_profile, profile_entropy, DegreeSequence,
    DimensionProfile,
};
pub use trace::{trace_a4, trace_formula};
