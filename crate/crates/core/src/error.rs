use thiserror::Error;

/// Errors raised while building a [`Graph`](crate::Graph).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("node id {id} out of range for {n} nodes")]
    IdOutOfRange { id: usize, n: usize },
    #[error("edge ({u}, {v}) has weight {w} outside [-{bound}, {bound}]")]
    WeightOutOfRange { u: usize, v: usize, w: i64, bound: i64 },
    #[error("self-loop at node {0}")]
    SelfLoop(usize),
    #[error("weight bound must be positive, got {0}")]
    NonPositiveBound(i64),
    #[error("n * M = {n} * {bound} leaves no headroom for distance arithmetic")]
    Overflow { n: usize, bound: i64 },
}

/// Errors raised by the shortest-path and replacement-path operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RpError {
    #[error("negative cycle reachable from the source")]
    NegativeCycle,
    #[error("target {t} is unreachable from source {s}")]
    Unreachable { s: usize, t: usize },
    #[error("node {0} is not in the graph")]
    NodeOutOfRange(usize),
    #[error("dimension mismatch: {left_cols} columns against {right_rows} rows")]
    DimensionMismatch { left_cols: usize, right_rows: usize },
    #[error("entry {value} outside [-{bound}, {bound}]")]
    EntryOutOfBound { value: i64, bound: i64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
}
