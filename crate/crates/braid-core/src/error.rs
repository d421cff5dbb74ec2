use thiserror::Error;

/// Errors raised by braid arithmetic.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("strand count must be at least 2, got {0}")]
    StrandCountTooSmall(usize),

    #[error("strand count {0} exceeds the supported maximum of 64")]
    StrandCountTooLarge(usize),

    #[error("generator index {index} out of range [1, {max}]")]
    GeneratorOutOfRange { index: i64, max: usize },

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("image array of length {len} is not a permutation of 1..={len}")]
    NotAPermutation { len: usize },

    #[error("cannot parse braid word letter {0:?}")]
    WordParse(String),
}
