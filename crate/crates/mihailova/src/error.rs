use thiserror::Error;

#[derive(Debug, Error)]
pub enum MihailovaError {
    #[error("strand count must be at least 6, got {0}")]
    StrandCountTooSmall(usize),

    #[error("subgroup index {i} out of range [1, {max}] for n = {n}")]
    SubgroupIndexOutOfRange { i: usize, n: usize, max: usize },

    #[error("key length must be at least 1")]
    EmptyKey,

    #[error("key normalizes to the identity; degenerate keys are rejected")]
    IdentityKey,

    #[error("sampling kept producing identity-valued keys; relator set looks degenerate")]
    RetryBudgetExhausted,

    #[error("generator id {0} not in the generator list of length {1}")]
    GeneratorIdOutOfRange(usize, usize),

    #[error("cannot parse free-group word {0:?}: letters must be u, t, U, T")]
    FreeWordParse(String),

    #[error("key file check digest mismatch: expected {expected}, computed {computed}")]
    CheckMismatch { expected: String, computed: String },

    #[error("unsupported key file version {0}")]
    UnsupportedVersion(u32),

    #[error("malformed document: {0}")]
    Malformed(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Braid(#[from] braid_core::BraidError),
}
