use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("node {node} out of range for graph with {n} nodes")]
    OutOfRangeNode { node: usize, n: usize },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("node {0} has no affiliation row")]
    MissingNode(usize),

    #[error("node {0} has more than one affiliation row")]
    DuplicateNode(usize),

    #[error("affiliation row for node {node} sums to {sum}, not 1")]
    BadSimplex { node: usize, sum: f64 },

    #[error("node {0} has no out-edges; patch sinks first")]
    SinkPresent(usize),

    #[error("no convergence after {iterations} iterations (last L1 delta {last_delta:e})")]
    NonConvergence { iterations: usize, last_delta: f64 },

    #[error("score mass vanished: all weights are zero")]
    DegenerateMass,

    #[error("expected {expected} communities, found {found}")]
    WrongK { expected: usize, found: usize },

    #[error("invalid parameters: {0}")]
    BadParams(String),

    #[error("all analysed scores are equal; cannot bucket a zero-width range")]
    DegenerateRange,

    #[error("each sample needs at least 2 observations (got {a} and {b})")]
    TooFewSamples { a: usize, b: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not symmetric: edge ({0},{1}) has no reverse")]
    NotSymmetric(usize, usize),

    #[error("k = {k} outside 1..={n}")]
    BadK { k: usize, n: usize },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
