use thiserror::Error;

use crate::graph::DegreeKind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("node {node} is out of range for a graph with {node_count} nodes")]
    NodeOutOfRange { node: usize, node_count: usize },

    #[error("{edges} edges exceed the capacity {capacity} of a simple digraph on {nodes} nodes")]
    Capacity {
        nodes: usize,
        edges: usize,
        capacity: usize,
    },

    #[error("resampling cap exhausted at iteration {iteration} after {rejections} rejected proposals")]
    ResamplingCap { iteration: usize, rejections: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("cannot sample from an empty candidate set")]
    EmptyCandidates,

    #[error("degree kinds differ: {0:?} vs {1:?}")]
    KindMismatch(DegreeKind, DegreeKind),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("only {count} entries at or above k_min, at least {needed} required")]
    InsufficientTail { count: usize, needed: usize },

    #[error("degenerate tail: all {count} entries at or above k_min are equal")]
    DegenerateTail { count: usize },

    #[error("eigenvalue solver did not converge on a block of size {0}")]
    EigenSolver(usize),

    #[error("tuning: {0}")]
    Tuning(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for failures caused by the generator running out of room
    /// (capacity or resampling budget), as opposed to bad input.
    pub fn is_generation_limit(&self) -> bool {
        matches!(self, Error::ResamplingCap { .. } | Error::Capacity { .. })
    }
}
