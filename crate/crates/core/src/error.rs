use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what}: size {requested} exceeds cap {cap}")]
    SizeLimit {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("series with zero constant term is not invertible")]
    NotInvertible,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("Adams operation would produce weight {weight}, above the cap {cap}")]
    TruncationOverflow { weight: usize, cap: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
