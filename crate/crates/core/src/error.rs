use std::fmt;

use thiserror::Error;

use crate::shapes::{BoxCoord, Partition};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts {0:?} are not weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("{inner} is not contained in {outer}")]
    NotContained { outer: Partition, inner: Partition },

    #[error("shape does not fit a {rows}x{cols} box")]
    Dimension { rows: usize, cols: usize },

    #[error("entry {value} is outside the alphabet 0..={max}")]
    Alphabet { value: u32, max: u32 },

    /// A named structural invariant failed, optionally at a specific box.
    #[error("{invariant} violated{}: {detail}", Location(*at))]
    Validation { invariant: &'static str, at: Option<BoxCoord>, detail: String },

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("invalid parameters: {0}")]
    Parameter(String),

    /// A condition that holds for every valid input did not.
    #[error("internal invariant broken: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn validation(invariant: &'static str, at: Option<BoxCoord>, detail: impl Into<String>) -> Self {
        Error::Validation { invariant, at, detail: detail.into() }
    }

    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }
}

struct Location(Option<BoxCoord>);

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Some(b) => write!(f, " at {b}"),
            None => Ok(()),
        }
    }
}
