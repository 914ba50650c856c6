use thiserror::Error;

use crate::graph::Violation;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {}", format_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("unknown edge {0:?}")]
    UnknownEdge(String),
    #[error("graph is not connected")]
    Disconnected,
    #[error("operation requires an undirected graph, found arc {0:?}")]
    NotAllDigon(String),
    #[error("graph is not a tree")]
    NotATree,
    #[error("size bound exceeded: {what} = {actual}, bound {bound}")]
    SizeBound { what: &'static str, actual: usize, bound: usize },
    #[error("matrix dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not Hermitian")]
    NotHermitian,
    #[error("not a walk: vertices {0:?} and {1:?} are not adjacent")]
    NotAWalk(String, String),
    #[error("not a cycle: {0}")]
    NotACycle(String),
    #[error("graph is not a gamma-monograph")]
    NotMonograph,
    #[error("edge labels of the root do not match the vertex labels of the target: {0}")]
    LabelingMismatch(String),
    #[error("matrix does not have the zero-nonzero pattern of the incidence matrix: {0}")]
    PatternMismatch(String),
    #[error("underlying graph is not a line graph (no complete clique system)")]
    NotALineGraph,
    #[error("diagonal is missing an entry for {0:?}")]
    MissingDiagonalEntry(String),
    #[error("diagonal does not relate the two incidence matrices (not co-roots)")]
    NoRelatingDiagonal,
    #[error("orientation matrix identity failed at ({0:?}, {1:?})")]
    NotAnOrientationMatrix(String, String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

fn format_violations(vs: &[Violation]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
