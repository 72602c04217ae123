use thiserror::Error;

use crate::quiver::Vertex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Dynkin datum {label}{rank}: {reason}")]
    InvalidDynkin {
        label: String,
        rank: usize,
        reason: &'static str,
    },

    #[error("node {node} is out of range for a rank {rank} diagram")]
    NodeOutOfRange { node: usize, rank: usize },

    #[error("vertex {0} does not lie in the chosen connected component")]
    VertexOutsideComponent(Vertex),

    #[error("vertex {0} is not part of the slice")]
    VertexNotInSlice(Vertex),

    #[error("vertex {0} is frozen and cannot be mutated")]
    FrozenVertex(Vertex),

    #[error("index {index} is not an exchangeable column (matrix has {columns} columns)")]
    NotExchangeable { index: usize, columns: usize },

    #[error("invalid window [{min}, {max}]: {reason}")]
    InvalidWindow {
        min: i64,
        max: i64,
        reason: &'static str,
    },

    #[error("window [{min}, {max}] is too small: {needed} must be exchangeable")]
    WindowTooSmall { min: i64, max: i64, needed: Vertex },

    #[error("matrix shapes do not agree: {0}")]
    ShapeMismatch(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("incompatible pair: {0}")]
    Incompatible(String),

    #[error("division is not exact; remainder {remainder}")]
    InexactDivision { remainder: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("{0}")]
    Unsupported(String),

    #[error("Frenkel-Mukhin expansion failed: {0}")]
    FrenkelMukhin(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
