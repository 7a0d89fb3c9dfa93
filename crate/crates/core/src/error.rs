use thiserror::Error;

use crate::colreg::BoxSet;
use crate::partition::{Cell, Partition};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing, got {0:?}")]
    NonMonotone(Vec<i64>),

    #[error("negative part {0}")]
    NegativePart(i64),

    #[error("cannot parse partition {text:?}: {reason}")]
    ParsePartition { text: String, reason: String },

    #[error("cannot parse fraction {0:?}")]
    ParseFraction(String),

    #[error("box {cell} is not in {partition}")]
    BoxOutside { cell: Cell, partition: Partition },

    #[error("modulus must be at least {min}, got {got}")]
    InvalidModulus { got: usize, min: usize },

    #[error("residue {residue} out of range for modulus {modulus}")]
    InvalidResidue { residue: usize, modulus: usize },

    #[error("{partition} is not {modulus}-regular")]
    NotRegular {
        partition: Partition,
        modulus: usize,
    },

    #[error("{0} has no good box of any residue")]
    NoGoodBox(Partition),

    #[error("no addable box of residue {residue} is co-good after adding it to {partition}")]
    NoCoGoodAddable {
        partition: Partition,
        residue: usize,
    },

    #[error(
        "{count} addable boxes of residue {residue} are co-good after adding them to {partition}"
    )]
    AmbiguousCoGood {
        partition: Partition,
        residue: usize,
        count: usize,
    },

    #[error("operator produced a non-partition sequence {0:?}")]
    NotPartition(Vec<i64>),

    #[error("wall {a}/{b} must satisfy 0 < a < b with gcd(a, b) = 1")]
    InvalidWall { a: usize, b: usize },

    #[error("slid boxes do not form a Young diagram: {0}")]
    NotAPartition(BoxSet),

    #[error("column regularization of {partition} at wall {a}/{b} left the partitions: {boxes}")]
    ColregFailure {
        partition: Partition,
        a: usize,
        b: usize,
        boxes: BoxSet,
    },

    #[error("operation needs a nonempty partition")]
    EmptyPartition,

    #[error("expected a partition of {expected}, got one of {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("trajectory length n must be at least {min}, got {got}")]
    InvalidLength { got: usize, min: usize },

    #[error("worker count must be at least 1, got {0}")]
    InvalidWorkers(usize),

    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}
