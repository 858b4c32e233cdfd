use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not a partition: {0:?} is not weakly decreasing")]
    NotPartition(Vec<usize>),
    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    NotContained { inner: String, outer: String },
    #[error("length {len} exceeds the allowed {max}")]
    TooLong { len: usize, max: usize },
    #[error("partition {0} has a nonempty {1}-core")]
    NonemptyCore(String, usize),
    #[error("partition {0} is not a {1}-core")]
    NotCore(String, usize),
    #[error("expected {expected} quotient components, got {got}")]
    QuotientArity { expected: usize, got: usize },
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("weight {0:?} is not a partition")]
    WeightNotDominant(Vec<usize>),
    #[error("partition {0} is not ({1},{2})-restricted")]
    NotRestricted(String, usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("monomial expansion is not symmetric: leftover coefficient at {0}")]
    NotSymmetric(String),
    #[error("charge needs a straight shape with partition weight")]
    ChargeUndefined,
}

pub type Result<T> = std::result::Result<T, Error>;
