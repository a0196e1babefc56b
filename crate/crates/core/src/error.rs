use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid Cartan type `{0}`")]
    InvalidCartanType(String),
    #[error("root system closure is inconsistent: {0}")]
    InconsistentRootSystem(String),
    #[error("cocharacter is not integral: {0}")]
    IntegralityViolation(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partitions have unequal sums ({0} vs {1})")]
    UnequalSums(usize, usize),
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("not a valid Jordan type for the form: {0}")]
    InvalidJordanType(String),
    #[error("no witness applies: {0}")]
    NoWitness(String),
    #[error("field lacks a required square root: {0}")]
    MissingSquareRoot(String),
    #[error("characteristic 2 is not supported here")]
    Characteristic2,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("element does not lie in the given subspace")]
    NotInSpan,
    #[error("linear system has no solution: {0}")]
    NoSolution(String),
    #[error("algebra has nonzero center, p-power is not determined by ad")]
    NonTrivialCenter,
    #[error("structure constants violate {0}")]
    BrokenAxiom(String),
    #[error("budget of {budget} exceeded: {what}")]
    BudgetExceeded { budget: u64, what: String },
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
