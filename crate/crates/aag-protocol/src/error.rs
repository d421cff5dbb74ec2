use thiserror::Error;

#[derive(Debug, Error)]
pub enum ProtocolError {
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("expected a message from role {expected}, got {got}")]
    RoleMismatch { expected: String, got: String },

    #[error("subgroup indices {i} and {j} give commuting subgroups; the exchange would be degenerate")]
    CommutingConfiguration { i: usize, j: usize },

    #[error("the derived shared key is the identity; session is degenerate")]
    DegenerateSession,

    #[error("shared keys disagree")]
    KeyMismatch,

    #[error("unsupported message version {0}")]
    UnsupportedVersion(u64),

    #[error("message carries {got} conjugates, expected {expected}")]
    WrongConjugateCount { expected: usize, got: usize },

    #[error("malformed document: {0}")]
    Malformed(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Braid(#[from] braid_core::BraidError),

    #[error(transparent)]
    Key(#[from] mihailova::MihailovaError),

    #[error("generator index {0} out of range for the public set")]
    PublicIndexOutOfRange(usize),
}
