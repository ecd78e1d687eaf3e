use thiserror::Error;

/// Errors raised by the fallible operations of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing and positive: {0:?}")]
    NotAPartition(Vec<u32>),
    #[error("parts must be strictly decreasing and positive: {0:?}")]
    NotStrict(Vec<u32>),
    #[error("weights differ ({0} vs {1}); the comparison is undefined")]
    WeightMismatch(u32, u32),
    #[error("{0:?}/{1:?} is not a horizontal strip")]
    NotAStrip(Vec<u32>, Vec<u32>),
    #[error("index {0} is negative; the operation is undefined")]
    NegativeIndex(i64),
    #[error("root vector entries must sum to zero: {0:?}")]
    NotARootVector(Vec<i64>),
    #[error("empty block in a partition sequence")]
    EmptyBlock,
    #[error("internal cross-check failed: {0}")]
    InternalMismatch(String),
}
