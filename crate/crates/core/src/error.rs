use thiserror::Error;

/// Errors raised by the algebraic operations and file loaders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("axis index {index} out of range 1..={n}")]
    AxisOutOfRange { index: usize, n: usize },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("rank {rank} out of range for {count} indices")]
    RankOutOfRange { rank: usize, count: usize },
    #[error("degree {degree} exceeds permutation cap {cap}")]
    DegreeExceedsCap { degree: usize, cap: usize },
    #[error("not a permutation of 1..={0}")]
    InvalidPermutation(usize),
    #[error("tensor is not symmetric")]
    NotSymmetric,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("order {requested} exceeds jet order {order}")]
    OrderTooHigh { requested: usize, order: usize },
    #[error("degenerate frame: rank {rank}, expected {expected}")]
    DegenerateFrame { rank: usize, expected: usize },
    #[error("singular matrix")]
    Singular,
    #[error("invalid box region: {0}")]
    InvalidRegion(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
