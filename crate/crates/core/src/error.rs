use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition too long for n variables (length {len}, n = {n})")]
    PartitionTooLong { len: usize, n: usize },

    #[error("cell ({row},{col}) is not in the diagram")]
    CellOutsideDiagram { row: usize, col: usize },

    #[error("symmetric-function degree {degree} exceeds the bound {bound}")]
    DegreeBoundExceeded { degree: u32, bound: u32 },

    #[error("not expandable at origin: denominator vanishes at 0")]
    NotExpandable,

    #[error("division by zero")]
    DivisionByZero,

    #[error("Omega undefined at the trivial character")]
    OmegaOfOne,

    #[error("z2-coefficient of degree {z2_degree} not holomorphic at z1=0 after summation")]
    NotHolomorphic { z2_degree: u32 },

    #[error("negative exponent z1^{a} z2^{b} in final series")]
    NegativeExponent { a: i64, b: i64 },

    #[error("{method} evaluator refuses n = {n} (limit {limit})")]
    ComplexityGuard { method: &'static str, n: usize, limit: usize },

    #[error("syntax error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("{0}")]
    InvalidArgument(String),
}

impl Error {
    /// Short stable identifier for diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidPartition(_) => "invalid-partition",
            Error::PartitionTooLong { .. } => "partition-too-long",
            Error::CellOutsideDiagram { .. } => "invalid-cell",
            Error::DegreeBoundExceeded { .. } => "degree-bound",
            Error::NotExpandable => "not-expandable",
            Error::DivisionByZero => "division-by-zero",
            Error::OmegaOfOne => "omega-undefined",
            Error::NotHolomorphic { .. } => "not-holomorphic",
            Error::NegativeExponent { .. } => "negative-exponent",
            Error::ComplexityGuard { .. } => "guard",
            Error::Parse { .. } => "parse",
            Error::InvalidArgument(_) => "invalid-argument",
        }
    }
}
