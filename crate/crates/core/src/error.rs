use alloc::string::String;
use core::fmt;

use crate::graph::Edge;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Order outside the range an operation accepts.
    OrderOutOfRange { n: usize, min: usize, max: Option<usize> },
    /// Two values that must share an order (or ambient dimension) do not.
    DimensionMismatch { left: usize, right: usize },
    InvalidEdge { edge: Edge, n: usize },
    EdgeIndexOutOfRange { index: usize, count: usize },
    NotAPermutation { cities: alloc::vec::Vec<usize> },
    InvalidSequence { reason: String },
    CityOutOfRange { city: usize, n: usize },
    DayOutOfRange { day: usize, n: usize },
    /// Gram-Schmidt produced a zero vector at this 1-based position.
    DependentInput { index: usize },
    EmbeddedData { reason: String },
    FormulaCollision { n: usize, i: usize, j: usize },
    NotUpperTriangular { row: usize },
    CompletionStalled { achieved: usize, target: usize },
    CapExceeded { n: usize, cap: usize },
    Internal { reason: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OrderOutOfRange { n, min, max: Some(max) } => {
                write!(f, "order n={n} outside supported range [{min}, {max}]")
            }
            Error::OrderOutOfRange { n, min, max: None } => {
                write!(f, "order n={n} below minimum {min}")
            }
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            Error::InvalidEdge { edge, n } => write!(f, "edge {edge} is not an edge of K_{n}^T"),
            Error::EdgeIndexOutOfRange { index, count } => {
                write!(f, "edge index {index} out of range (edge count {count})")
            }
            Error::NotAPermutation { cities } => write!(f, "{cities:?} is not a permutation of 1..n"),
            Error::InvalidSequence { reason } => write!(f, "invalid city sequence: {reason}"),
            Error::CityOutOfRange { city, n } => write!(f, "city {city} outside [1, {n}]"),
            Error::DayOutOfRange { day, n } => write!(f, "day {day} outside [1, {n}]"),
            Error::DependentInput { index } => {
                write!(f, "linearly dependent input: vector {index} lies in the span of its predecessors")
            }
            Error::EmbeddedData { reason } => write!(f, "embedded base-case data failed self-check: {reason}"),
            Error::FormulaCollision { n, i, j } => {
                write!(f, "family formulas collide at n={n}, i={i}, j={j}")
            }
            Error::NotUpperTriangular { row } => write!(f, "row {row} has no admissible pivot edge"),
            Error::CompletionStalled { achieved, target } => {
                write!(f, "basis completion stalled at rank {achieved} of {target}")
            }
            Error::CapExceeded { n, cap } => {
                write!(f, "n={n} exceeds the enumeration cap {cap}; raise the cap explicitly")
            }
            Error::Internal { reason } => write!(f, "internal error: {reason}"),
        }
    }
}

impl core::error::Error for Error {}
