//! Attacker key recovery: turning a recovered conjugator into the shared
//! session key.
//!
//! Any candidate that reproduces the initiator's message acts on the
//! generators exactly like the true key, so substituting the responder's
//! conjugates into the candidate word yields the true shared key even if
//! the candidate differs from the key by a central factor.

use aag_protocol::{commit_word, substitute, DigestAlg, ProtocolMessage, Role, SharedKey};
use braid_core::{normalize, BraidWord};

use crate::report::AttackError;

/// Result of replaying a candidate initiator key against a session.
#[derive(Debug, Clone)]
pub struct RecoveryOutcome {
    /// Candidate reproduces every conjugate of the initiator's message.
    pub reproduces_message: bool,
    /// The key the candidate derives, when the message check passes.
    pub candidate_key: Option<SharedKey>,
    /// Whether the candidate key equals the session key.
    pub key_match: Option<bool>,
}

fn replay(
    candidate: &BraidWord,
    msg_a: &ProtocolMessage,
    msg_b: &ProtocolMessage,
) -> Result<RecoveryOutcome, AttackError> {
    let n = msg_a.n;
    let recommit = commit_word(n, candidate, Role::A)?;
    if recommit.conjugates != msg_a.conjugates {
        return Ok(RecoveryOutcome {
            reproduces_message: false,
            candidate_key: None,
            key_match: None,
        });
    }
    // the initiator computation with the candidate in place of the key
    let conjugated = substitute(candidate, &msg_b.conjugates)?;
    let key = normalize(candidate).invert().multiply(&conjugated)?;
    Ok(RecoveryOutcome {
        reproduces_message: true,
        candidate_key: Some(SharedKey::with_digest(key, DigestAlg::Sha256)),
        key_match: None,
    })
}

/// Verifies a candidate against the initiator's message and, on success,
/// compares the derived key against the known session key.
pub fn attacker_key_recovery(
    candidate: &BraidWord,
    msg_a: &ProtocolMessage,
    msg_b: &ProtocolMessage,
    k_true: &SharedKey,
) -> Result<RecoveryOutcome, AttackError> {
    let mut outcome = replay(candidate, msg_a, msg_b)?;
    if let Some(key) = &outcome.candidate_key {
        outcome.key_match = Some(key.nf == k_true.nf);
    }
    Ok(outcome)
}

/// Digest-only variant for recorded transcripts, where the true key is
/// not available but its digest is.
pub fn attacker_key_recovery_digest(
    candidate: &BraidWord,
    msg_a: &ProtocolMessage,
    msg_b: &ProtocolMessage,
    true_digest_hex: &str,
) -> Result<RecoveryOutcome, AttackError> {
    let mut outcome = replay(candidate, msg_a, msg_b)?;
    if let Some(key) = &outcome.candidate_key {
        outcome.key_match = Some(key.digest_hex() == true_digest_hex);
    }
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use aag_protocol::{commit, derive_key_initiator};
    use mihailova::{sample_key, RelatorSet};

    fn session() -> (mihailova::PrivateKey, ProtocolMessage, ProtocolMessage, SharedKey) {
        let r = RelatorSet::diagonal_only();
        let x = sample_key(8, 1, 8, 42, &r).unwrap();
        let y = sample_key(8, 2, 8, 43, &r).unwrap();
        let msg_a = commit(&x, Role::A).unwrap();
        let msg_b = commit(&y, Role::B).unwrap();
        let k = derive_key_initiator(&x, &msg_b).unwrap();
        (x, msg_a, msg_b, k)
    }

    #[test]
    fn true_key_matches() {
        let (x, msg_a, msg_b, k) = session();
        let out = attacker_key_recovery(&x.expansion, &msg_a, &msg_b, &k).unwrap();
        assert!(out.reproduces_message);
        assert_eq!(out.key_match, Some(true));
    }

    #[test]
    fn central_shift_still_matches() {
        let (x, msg_a, msg_b, k) = session();
        let delta2 = BraidWord::delta(8).unwrap().repeat(2);
        let shifted = delta2.concat(&x.expansion).unwrap();
        let out = attacker_key_recovery(&shifted, &msg_a, &msg_b, &k).unwrap();
        assert!(out.reproduces_message);
        assert_eq!(out.key_match, Some(true));

        let digest_out =
            attacker_key_recovery_digest(&shifted, &msg_a, &msg_b, &k.digest_hex()).unwrap();
        assert_eq!(digest_out.key_match, Some(true));
    }

    #[test]
    fn wrong_candidate_fails_message_check() {
        let (_, msg_a, msg_b, k) = session();
        let wrong = BraidWord::new(8, vec![1]).unwrap();
        let out = attacker_key_recovery(&wrong, &msg_a, &msg_b, &k).unwrap();
        assert!(!out.reproduces_message);
        assert_eq!(out.key_match, None);
    }
}
