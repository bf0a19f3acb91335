use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("{what}: size {size} exceeds supported maximum {max}")]
    UnsupportedSize {
        what: &'static str,
        size: usize,
        max: usize,
    },

    #[error("alpha {0} outside the admissible range")]
    AlphaOutOfRange(f64),

    #[error("no convergence after {iterations} iterations (residual {residual:e})")]
    NonConvergence { iterations: usize, residual: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition is not equitable")]
    NotEquitable,

    #[error("edge ({0}, {1}) is not an edge of the host graph")]
    EdgeNotInGraph(usize, usize),

    #[error("no sign change of the polynomial in [0, {0}]")]
    Bracketing(f64),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("property violated: {0}")]
    PropertyViolation(String),

    #[error("invalid number {0:?}")]
    InvalidNumber(String),
}
