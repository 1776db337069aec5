use thiserror::Error;

/// Errors raised by tableau, algebra and tensor operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Young diagram {0:?}: row lengths must be positive and weakly decreasing")]
    InvalidDiagram(Vec<usize>),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("tableau {0} is not standard")]
    NonStandard(String),
    #[error("n = {n} is outside the supported range 1..={max}")]
    OutOfRange { n: usize, max: usize },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("slot set must be a nonempty subset of 1..={n}, got {slots:?}")]
    InvalidSlots { slots: Vec<usize>, n: usize },
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("operation requires degree at least {min}, got {n}")]
    DegreeTooSmall { n: usize, min: usize },
    #[error("tensor space of dimension {dim}^{n} exceeds the size cap {cap}")]
    SizeCap { dim: usize, n: usize, cap: usize },
    #[error("operator shape mismatch: (n={0}, N={1}) vs (n={2}, N={3})")]
    ShapeMismatch(usize, usize, usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
