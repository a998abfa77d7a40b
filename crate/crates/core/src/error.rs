use thiserror::Error;

/// Errors raised by tree construction, the stability routines and the harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("vertex {vertex} out of range for order {n}")]
    OutOfRange { vertex: usize, n: usize },
    #[error("order {0} is too small (trees need at least 2 vertices)")]
    TooSmall(usize),
    #[error("order {n} exceeds the ceiling of {ceiling}")]
    TooLarge { n: usize, ceiling: usize },
    #[error("deleting every vertex leaves an empty graph")]
    EmptyResult,
    #[error("{count} sets exist, more than the limit of {limit}")]
    LimitExceeded { count: String, limit: usize },
    #[error("vertex set is not stable: {0} and {1} are adjacent")]
    NotStable(usize, usize),
    #[error("vertex {0} is not a pendant vertex")]
    NotPendant(usize),
    #[error("claim needs an exhaustive stable-set scan but n = {n} exceeds the scan ceiling {ceiling}")]
    ScaleExceeded { n: usize, ceiling: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid corpus: {0}")]
    InvalidCorpus(String),
    #[error("unknown claim identifier `{0}`")]
    UnknownClaim(String),
}

pub type Result<T> = std::result::Result<T, Error>;
