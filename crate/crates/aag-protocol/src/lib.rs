//! Commutator key exchange over braid groups.
//!
//! Both parties draw private keys from Mihailova subgroups of `B_n`,
//! commit by conjugating every Artin generator, and derive the shared
//! commutator key by letter substitution. Messages and transcripts have a
//! canonical bit-exact wire encoding. The original scheme over arbitrary
//! public generator sets is included as a baseline.

pub mod derive;
pub mod error;
pub mod message;
pub mod original;
pub mod session;

pub use derive::{
    derive_key_initiator, derive_key_initiator_raw, derive_key_responder, digest_nf, substitute,
    DigestAlg, SharedKey,
};
pub use error::ProtocolError;
pub use message::{commit, commit_word, ProtocolMessage, Role, WIRE_VERSION};
pub use original::{run_original_aag, OriginalTranscript};
pub use session::{
    exchange_with_keys, run_exchange, run_exchange_unchecked, supports_interact, SessionConfig,
    Transcript, TranscriptFile,
};
