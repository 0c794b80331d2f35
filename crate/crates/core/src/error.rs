use num_bigint::BigInt;
use thiserror::Error;

use crate::partitions::Partition;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotAPartition(Vec<u32>),

    #[error("partition {partition} has more than {max} nonzero parts")]
    TooManyParts { partition: Partition, max: usize },

    #[error("partition weight {weight} exceeds brute-force cap {cap}")]
    SizeCap { weight: u32, cap: u32 },

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("internal consistency: {0} is not an integer")]
    NonIntegral(String),

    #[error("internal consistency: {0}")]
    Inconsistent(String),

    #[error("integral table has no entry for {0}")]
    MissingEntry(Partition),

    #[error("invalid integral table: {0}")]
    Schema(String),

    #[error("degree formula gave non-positive value {0}")]
    NonPositive(BigInt),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

macro_rules! ensure_range {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err($crate::error::Error::OutOfRange(format!($($arg)+)));
        }
    };
}
pub(crate) use ensure_range;
