use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a permutation of 1..={len}: {reason}")]
    InvalidPermutation { len: usize, reason: String },

    #[error("modulus k must be at least 1")]
    ZeroModulus,

    #[error("length {len} is not divisible by k = {k}")]
    NotDivisible { len: usize, k: usize },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("duplicate entry {0}")]
    DuplicateEntry(usize),

    #[error("shift {shift} out of range 0..{k}")]
    ShiftOutOfRange { shift: usize, k: usize },

    #[error("dimension mismatch: {0}")]
    Mismatch(String),

    #[error("cycle type is not (k^n) for k = {k}: found cycle of length {found}")]
    NotKCycleFactorization { k: usize, found: usize },

    #[error(transparent)]
    Parse(#[from] crate::text::ParseError),

    #[error("{what}: {count} items exceeds capacity {limit}")]
    Capacity {
        what: &'static str,
        count: String,
        limit: String,
    },
}

impl Error {
    pub(crate) fn capacity(what: &'static str, count: Option<u128>, limit: u128) -> Self {
        Error::Capacity {
            what,
            count: count.map_or_else(|| "overflow".to_string(), |c| c.to_string()),
            limit: limit.to_string(),
        }
    }
}
