use std::fmt;

use thiserror::Error;

/// Which side of the bipartition an index refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => write!(f, "left"),
            Side::Right => write!(f, "right"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge ({l}, {r}) out of range for a graph with {n_left} left and {n_right} right vertices")]
    EdgeOutOfRange {
        l: usize,
        r: usize,
        n_left: usize,
        n_right: usize,
    },

    #[error("{side} index {index} out of range (side has {size} vertices)")]
    IndexOutOfRange { side: Side, index: usize, size: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("left vertex {v} passes its matching test, so it has no blocker set")]
    PivotNotBlocked { v: usize },

    #[error("|L| = {n_left} exceeds the enumeration guard {guard}; raise the guard explicitly to proceed")]
    GuardExceeded { n_left: usize, guard: usize },

    #[error("search space of {combinations} combinations exceeds the limit {limit}")]
    SearchTooLarge { combinations: u128, limit: u128 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
