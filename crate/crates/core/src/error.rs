use thiserror::Error;

/// Errors from graph/digraph kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("duplicate arc {0}->{1}")]
    DuplicateArc(usize, usize),
    #[error("graph is disconnected; Wiener index is undefined")]
    Disconnected,
    #[error("digraph is not strongly connected; Wiener index is undefined")]
    NotStronglyConnected,
    #[error("input is not a tree")]
    NotATree,
    #[error("stated diameter {stated} does not match actual diameter {actual}")]
    DiameterMismatch { stated: u16, actual: u16 },
}

/// Errors from the deterministic family builders.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum BuildError {
    #[error("order {n} is invalid for family {family}: {reason}")]
    InvalidOrder {
        family: &'static str,
        n: u64,
        reason: &'static str,
    },
    #[error("parameters (n={n}, d={d}) are invalid for {family}: {reason}")]
    InvalidParams {
        family: &'static str,
        n: u64,
        d: u64,
        reason: &'static str,
    },
    #[error("split constant c={0} must lie in (0, 0.5)")]
    SplitConstantOutOfRange(f64),
    #[error("split {split} is invalid: must be between 1 and {max}")]
    InvalidSplit { split: u64, max: u64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Errors from bound evaluation and the deficit audit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("parameters (n={n}, d={d}) are out of range: {reason}")]
    InvalidParams { n: u64, d: u64, reason: &'static str },
    #[error("rooted tree spec is invalid: {0}")]
    InvalidSpec(&'static str),
    #[error("audit requires a connected graph")]
    Disconnected,
    #[error("audit requires diameter at least 3, got {0}")]
    DiameterTooSmall(u16),
}

/// Errors from the exhaustive searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("order {n} exceeds the {kind} search budget of n <= {max}")]
    OutOfBudget { kind: &'static str, n: u32, max: u32 },
    #[error("no {kind} of order {n} has diameter {d}")]
    EmptyClass { kind: &'static str, n: u32, d: u16 },
    #[error("canonical form supports n <= {max}, got {n}")]
    CanonTooLarge { n: usize, max: usize },
}

/// Errors from text codecs (JSON, graph6, digraph6).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("empty input")]
    Empty,
    #[error("invalid byte {byte:#x} at position {pos}")]
    InvalidByte { byte: u8, pos: usize },
    #[error("truncated input: expected {expected} data bytes, got {got}")]
    Truncated { expected: usize, got: usize },
    #[error("order {0} exceeds the supported range")]
    OrderTooLarge(u64),
    #[error("digraph6 input encodes a self-loop at vertex {0}")]
    LoopEncoded(usize),
    #[error("trailing padding bits are not zero")]
    DirtyPadding,
    #[error("JSON error: {0}")]
    Json(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl From<serde_json::Error> for CodecError {
    fn from(e: serde_json::Error) -> Self {
        CodecError::Json(e.to_string())
    }
}
