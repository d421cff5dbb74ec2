//! End-to-end sessions and transcript files.
//!
//! A transcript file is a JSON array of the two commitment messages plus
//! a footer: `[<message A>,<message B>,{"match":true,"digest":"<hex>"}]`,
//! all in canonical encoding.

use std::path::Path;

use mihailova::{gi_support, sample_key, PrivateKey, RelatorSet};
use serde::Deserialize;

use crate::derive::{derive_key_initiator, derive_key_responder, SharedKey};
use crate::error::ProtocolError;
use crate::message::{commit, ProtocolMessage, Role};

/// Parameters of a key-exchange session.
#[derive(Debug, Clone)]
pub struct SessionConfig {
    pub n: usize,
    pub alice_index: usize,
    pub bob_index: usize,
    pub key_length: usize,
    pub seed_a: u64,
    pub seed_b: u64,
    pub relators: RelatorSet,
}

impl Default for SessionConfig {
    fn default() -> Self {
        use mihailova::defaults;
        SessionConfig {
            n: defaults::N,
            alice_index: defaults::ALICE_INDEX,
            bob_index: defaults::BOB_INDEX,
            key_length: defaults::KEY_LENGTH,
            seed_a: defaults::SEED,
            seed_b: defaults::SEED + 1,
            relators: RelatorSet::diagonal_only(),
        }
    }
}

/// True iff the generator supports of `G_i` and `G_j` contain indices at
/// distance at most one, so the subgroups do not commute letterwise.
pub fn supports_interact(i: usize, j: usize) -> bool {
    let si = gi_support(i);
    let sj = gi_support(j);
    si.iter()
        .any(|&a| sj.iter().any(|&b| a.abs_diff(b) <= 1))
}

impl SessionConfig {
    /// Rejects configurations whose subgroups commute.
    pub fn validate(&self) -> Result<(), ProtocolError> {
        mihailova::check_indices(self.n, self.alice_index)?;
        mihailova::check_indices(self.n, self.bob_index)?;
        if !supports_interact(self.alice_index, self.bob_index) {
            return Err(ProtocolError::CommutingConfiguration {
                i: self.alice_index,
                j: self.bob_index,
            });
        }
        Ok(())
    }
}

/// A completed exchange: both messages, both derived keys.
#[derive(Debug, Clone)]
pub struct Transcript {
    pub msg_a: ProtocolMessage,
    pub msg_b: ProtocolMessage,
    pub key_a: SharedKey,
    pub key_b: SharedKey,
}

impl Transcript {
    pub fn matched(&self) -> bool {
        self.key_a == self.key_b
    }

    /// Canonical transcript file bytes.
    pub fn encode(&self) -> String {
        format!(
            "[{},{},{{\"match\":{},\"digest\":\"{}\"}}]",
            self.msg_a.encode(),
            self.msg_b.encode(),
            self.matched(),
            self.key_a.digest_hex()
        )
    }

    pub fn write(&self, path: &Path) -> Result<(), ProtocolError> {
        std::fs::write(path, self.encode())?;
        Ok(())
    }
}

/// A transcript as read back from disk: the two messages plus the footer.
/// Keys are not recoverable from the wire, only their digest.
#[derive(Debug, Clone)]
pub struct TranscriptFile {
    pub msg_a: ProtocolMessage,
    pub msg_b: ProtocolMessage,
    pub matched: bool,
    pub digest_hex: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Footer {
    #[serde(rename = "match")]
    matched: bool,
    digest: String,
}

impl TranscriptFile {
    pub fn decode(text: &str) -> Result<Self, ProtocolError> {
        let parts: Vec<serde_json::Value> =
            serde_json::from_str(text).map_err(|e| ProtocolError::Malformed(e.to_string()))?;
        if parts.len() != 3 {
            return Err(ProtocolError::Malformed(format!(
                "transcript has {} entries, expected 3",
                parts.len()
            )));
        }
        let msg_a = ProtocolMessage::decode(&parts[0].to_string())?;
        let msg_b = ProtocolMessage::decode(&parts[1].to_string())?;
        if msg_a.role != Role::A || msg_b.role != Role::B {
            return Err(ProtocolError::Malformed(
                "transcript messages must be role A then role B".to_string(),
            ));
        }
        if msg_a.n != msg_b.n {
            return Err(ProtocolError::StrandMismatch {
                left: msg_a.n,
                right: msg_b.n,
            });
        }
        let footer: Footer = serde_json::from_value(parts[2].clone())
            .map_err(|e| ProtocolError::Malformed(e.to_string()))?;
        if hex::decode(&footer.digest).is_err() {
            return Err(ProtocolError::Malformed("digest is not hex".to_string()));
        }
        Ok(TranscriptFile {
            msg_a,
            msg_b,
            matched: footer.matched,
            digest_hex: footer.digest,
        })
    }

    pub fn read(path: &Path) -> Result<Self, ProtocolError> {
        Self::decode(&std::fs::read_to_string(path)?)
    }
}

/// Runs the exchange with already-sampled keys. Errors if the derived key
/// is the identity or the two sides disagree.
pub fn exchange_with_keys(x: &PrivateKey, y: &PrivateKey) -> Result<Transcript, ProtocolError> {
    if x.n != y.n {
        return Err(ProtocolError::StrandMismatch { left: x.n, right: y.n });
    }
    let msg_a = commit(x, Role::A)?;
    let msg_b = commit(y, Role::B)?;
    let key_a = derive_key_initiator(x, &msg_b)?;
    let key_b = derive_key_responder(y, &msg_a)?;
    if key_a != key_b {
        return Err(ProtocolError::KeyMismatch);
    }
    if key_a.nf.is_identity() {
        return Err(ProtocolError::DegenerateSession);
    }
    Ok(Transcript {
        msg_a,
        msg_b,
        key_a,
        key_b,
    })
}

/// Samples both private keys and runs the full exchange,
/// rejecting commuting configurations up front.
pub fn run_exchange(cfg: &SessionConfig) -> Result<(Transcript, PrivateKey, PrivateKey), ProtocolError> {
    cfg.validate()?;
    let (t, x, y) = run_exchange_unchecked(cfg)?;
    Ok((t, x, y))
}

/// Like [`run_exchange`] but skips the commuting-configuration precheck;
/// degenerate sessions then surface as [`ProtocolError::DegenerateSession`]
/// at derivation time.
pub fn run_exchange_unchecked(
    cfg: &SessionConfig,
) -> Result<(Transcript, PrivateKey, PrivateKey), ProtocolError> {
    let x = sample_key(cfg.n, cfg.alice_index, cfg.key_length, cfg.seed_a, &cfg.relators)?;
    let y = sample_key(cfg.n, cfg.bob_index, cfg.key_length, cfg.seed_b, &cfg.relators)?;
    let t = exchange_with_keys(&x, &y)?;
    Ok((t, x, y))
}
