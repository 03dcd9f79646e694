use thiserror::Error;

/// Errors raised by every module of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid skew diagram: {0}")]
    InvalidDiagram(String),
    #[error("box ({a},{i}) is not in the skew diagram")]
    BoxNotInDiagram { a: usize, i: usize },
    #[error("column {a} out of range 1..={max}")]
    ColumnOutOfRange { a: usize, max: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid Grassmann necklace: {0}")]
    InvalidNecklace(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("expected an index tuple of length {expected}, got {got}")]
    WrongTupleLength { expected: usize, got: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("basis vectors are linearly dependent")]
    DependentBasis,
    #[error("target vector is not in the span of the basis")]
    NotInSpan,
    #[error("matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error("point is not in the skew shaped positroid: {0}")]
    NotMember(String),
    #[error("point is not in U_{a}: minor {minor:?} vanishes")]
    NotInOpenSet { a: usize, minor: Vec<usize> },
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
    #[error("sampler exhausted its retry budget after {0} attempts")]
    RetryBudget(usize),
    #[error("cannot mutate: {0}")]
    Mutation(String),
    #[error("zero denominator: {0}")]
    ZeroDenominator(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
