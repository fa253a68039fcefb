use thiserror::Error;

use crate::cube::{EdgeId, Vertex};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid dimension {0}: expected 2 <= n <= 16")]
    InvalidDimension(u32),

    #[error("vertices {u} and {v} are not adjacent in Q_{n}")]
    NotAnEdge { u: Vertex, v: Vertex, n: u32 },

    #[error("vertex {v} out of range for Q_{n}")]
    VertexOutOfRange { v: u64, n: u32 },

    #[error("edge id {id} out of range for Q_{n}")]
    EdgeOutOfRange { id: u64, n: u32 },

    #[error("edge {0} is already present")]
    AlreadyPresent(EdgeId),

    #[error("edge set is not C4-free (first violation at cycle {first_violation}, {violations} in total)")]
    NotC4Free {
        first_violation: usize,
        violations: usize,
    },

    #[error("invalid move: {0}")]
    InvalidMove(String),

    #[error("initial edge set has {actual} edges, expected {expected}")]
    InvalidInit { expected: usize, actual: usize },

    #[error("dimension mismatch: Q_{left} vs Q_{right}")]
    DimensionMismatch { left: u32, right: u32 },

    #[error("entropy is undefined for an all-zero profile")]
    UndefinedEntropy,

    #[error(
        "power iteration did not converge after {iterations} iterations (residual {residual:e})"
    )]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("edge set is empty")]
    EmptyEdgeSet,

    #[error("corpus is empty")]
    EmptyCorpus,

    #[error("corpus mixes edge counts {0} and {1}")]
    MixedEdgeCounts(usize, usize),

    #[error("{0}")]
    InvalidArgument(String),
}
