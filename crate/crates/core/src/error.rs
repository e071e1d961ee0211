use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported field order {0}: only GF(2) and GF(3) are implemented")]
    UnsupportedField(u32),

    #[error("residue {value} is out of range for GF({q})")]
    ResidueOutOfRange { value: u32, q: u8 },

    #[error("field mismatch: GF({left}) vs GF({right})")]
    FieldMismatch { left: u8, right: u8 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("check matrix column {0} is zero")]
    ZeroColumn(usize),

    #[error("check matrix columns {0} and {1} are collinear")]
    CollinearColumns(usize, usize),

    #[error("{q}^{m} words exceed the explicit budget of {budget} vertices")]
    BudgetExceeded { q: u8, m: usize, budget: u64 },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("code is empty")]
    EmptyCode,

    #[error("vertex {vertex} is out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: u64, order: u64 },

    #[error("not a partition: {0}")]
    NotAPartition(String),

    #[error("invalid connecting set: {0}")]
    InvalidConnectingSet(String),

    #[error("operation requires a Cayley graph")]
    NotCayley,

    #[error("graph adjacency is not materialized (graph exceeds the explicit budget)")]
    NotExplicit,

    #[error("covering radius mismatch: array implies {expected}, distance partition has {found}")]
    RhoMismatch { expected: usize, found: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
