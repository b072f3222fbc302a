use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("ordering covers {got} vertices but the graph has {expected}")]
    RankMismatch { expected: usize, got: usize },

    #[error("ordering is not a bijection: {0}")]
    NotBijective(String),

    #[error("cannot place {m} edges on {n} vertices (at most {max})")]
    TooManyEdges { n: usize, m: u64, max: u64 },

    #[error("{what}: size {got} exceeds guard {limit}")]
    GuardExceeded {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("invalid formula: {0}")]
    InvalidFormula(String),

    #[error("invalid set cover instance: {0}")]
    InvalidInstance(String),

    #[error("element {0} is not covered by any set")]
    Uncoverable(usize),

    #[error("vertex {vertex} would need negative weight {weight}")]
    NegativeWeight { vertex: usize, weight: i64 },

    #[error("construction exceeds {limit} vertices")]
    SizeLimit { limit: usize },

    #[error("weights cover {got} vertices but the graph has {expected}")]
    WeightMismatch { expected: usize, got: usize },

    #[error("empty multiset")]
    EmptyMultiset,
}

pub(crate) fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}
