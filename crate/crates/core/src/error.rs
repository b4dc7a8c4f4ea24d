use thiserror::Error;

/// Errors raised by the growth-series toolkit.
///
/// Integrity failures mark an exact cross-check that did not hold; every
/// other variant is a problem with the input or a configured limit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("polynomial division leaves a nonzero remainder")]
    InexactDivision,

    #[error("rank {rank} exceeds the subset enumeration bound {bound}")]
    RankBound { rank: usize, bound: usize },

    #[error("limit exceeded: {0}")]
    Limit(String),

    #[error("integrity failure: {0}")]
    Integrity(String),
}

impl Error {
    pub fn is_integrity(&self) -> bool {
        matches!(self, Error::Integrity(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
