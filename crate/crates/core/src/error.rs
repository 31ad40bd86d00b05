use thiserror::Error;

use crate::model::{Color, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed document: {0}")]
    Parse(String),

    #[error("color out of range: {value} at row {row}, column {col} (expected 1..={r})")]
    ColorOutOfRange {
        row: usize,
        col: usize,
        value: i64,
        r: usize,
    },

    #[error("ragged matrix: row {row} has {found} entries, expected {expected}")]
    RaggedMatrix {
        row: usize,
        found: usize,
        expected: usize,
    },

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("color {color} out of range 1..={r}")]
    ColorArg { color: Color, r: usize },

    #[error("not spanning: {vertex} has no edge of color {color}")]
    NotSpanning { vertex: Vertex, color: Color },

    #[error("color {color} is not a bi-equivalence graph: ({x}, {y}) lies in one component but has another color")]
    NotBiEquivalence { color: Color, x: usize, y: usize },

    #[error("no spanning color")]
    NoSpanningColor,

    #[error("instance is a reduced antichain partition: no structural rule applies")]
    NoStructuralRule,

    #[error("invalid cover: {0}")]
    InvalidCover(String),

    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),

    #[error("hypergraphs do not share partite classes")]
    ClassMismatch,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("instance exceeds guard limit: {0}")]
    GuardLimit(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
