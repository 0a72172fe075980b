//! Crate-wide error type.

use crate::partitions::Partition;

/// Errors surfaced by the public API.
///
/// `Integrity` marks a failed internal consistency check (integrality,
/// divisibility, stability): it signals an implementation bug rather than bad
/// input, and is never produced by well-formed computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("size mismatch: {left} has size {left_size}, {right} has size {right_size}")]
    SizeMismatch {
        left: Partition,
        right: Partition,
        left_size: u32,
        right_size: u32,
    },

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(u32, u32),

    #[error("cannot parse partition from {input:?}: {reason}")]
    ParsePartition { input: String, reason: String },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("integrity check failed: {0}")]
    Integrity(String),

    #[error("oracle bounds exceeded: n = {n}, k = {k} (limits: n <= {max_n}, k <= {max_k})")]
    OracleBounds {
        n: u32,
        k: u32,
        max_n: u32,
        max_k: u32,
    },

    #[error("cache: {0}")]
    Cache(String),
}

impl Error {
    pub(crate) fn size_mismatch(left: &Partition, right: &Partition) -> Self {
        Error::SizeMismatch {
            left: left.clone(),
            right: right.clone(),
            left_size: left.size(),
            right_size: right.size(),
        }
    }
}
