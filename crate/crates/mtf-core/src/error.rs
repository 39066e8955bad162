use crate::graph::Edge;

/// Errors for precondition and capacity violations.
///
/// Falsified mathematical claims are *not* errors; verifier operations
/// report those through their return values so callers can emit witnesses.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex count {0} out of range (1..=64)")]
    VertexCount(usize),

    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexRange { v: usize, n: usize },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("{what} too large: {got} exceeds capacity {limit}")]
    Capacity {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("{op} is exact only for n <= {max}, got n = {got}")]
    Regime {
        op: &'static str,
        max: usize,
        got: usize,
    },

    #[error("graph is not triangle-free: triangle on vertices {0:?}")]
    NotTriangleFree((usize, usize, usize)),

    #[error("graphs are not edge-disjoint: both contain {0}")]
    NotEdgeDisjoint(Edge),

    #[error("hypothesis violated: triangle with A-edge {a} and S-edges {s1}, {s2}")]
    MixedTriangle { a: Edge, s1: Edge, s2: Edge },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("n = {n} must be divisible by {d}")]
    Divisibility { n: usize, d: usize },

    #[error("choice vector has wrong shape: expected {expected} entries, got {got}")]
    ChoiceShape { expected: usize, got: usize },

    #[error("search budget of {0} nodes exceeded")]
    Budget(u64),

    #[error("invalid structure witness: {0}")]
    InvalidWitness(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
