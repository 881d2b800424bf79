use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("modulus {p} is not a prime greater than {n}")]
    BadModulus { p: u64, n: usize },

    #[error("degree {0} is not supported here: {1}")]
    UnsupportedDegree(usize, String),

    #[error("letter {0:?} does not occur in the tree")]
    MissingLeaf(char),

    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
