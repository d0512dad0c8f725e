use alloc::string::String;

use crate::schubert::{BoxShape, Partition};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid box {rows}x{cols}: need at least one row and d >= r")]
    InvalidBox { rows: u32, cols: u32 },

    #[error("partition ({partition}) does not fit in the {shape} box")]
    PartitionOutsideBox { partition: Partition, shape: BoxShape },

    #[error("classes live in different boxes ({left} vs {right})")]
    BoxMismatch { left: BoxShape, right: BoxShape },

    #[error("not balanced: r = {r} does not divide {numerator}, so n is not an integer")]
    NotBalanced { numerator: i64, r: u32 },

    #[error("regime violation: {0}")]
    RegimeViolation(String),

    #[error("degree mismatch: a + b + g = {actual}, expected 2(d-1) = {expected}")]
    DegreeMismatch { actual: i64, expected: i64 },

    #[error("codimension {size} exceeds d - r = {limit}")]
    CodimTooLarge { size: u32, limit: u32 },

    #[error("invalid k = {k}: need 1 <= k <= min(d, n) = min({d}, {n})")]
    InvalidK { k: u32, d: u32, n: i64 },

    #[error("grid too small: {red} red cells do not fit in a {rows}x{cols} grid")]
    GridTooSmall { red: u32, rows: u32, cols: u32 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
