//! Attack instances: simultaneous conjugacy pairs sharing one conjugator.

use aag_protocol::{ProtocolMessage, TranscriptFile};
use braid_core::{normalize, BraidWord, CanonicalFactor, NormalForm};

use crate::report::AttackError;

/// A list of `(base, conjugated)` pairs, all conjugated by the same
/// unknown element. `planted` carries the ground-truth conjugator on
/// benchmark instances.
#[derive(Debug, Clone)]
pub struct AttackInstance {
    pub n: usize,
    pub pairs: Vec<(NormalForm, NormalForm)>,
    pub planted: Option<BraidWord>,
}

impl AttackInstance {
    pub fn new(n: usize, pairs: Vec<(NormalForm, NormalForm)>) -> Self {
        AttackInstance {
            n,
            pairs,
            planted: None,
        }
    }

    /// Pairs `(sigma_j, k^{-1} sigma_j k)` from a commitment message.
    pub fn from_message(msg: &ProtocolMessage) -> Result<Self, AttackError> {
        let n = msg.n;
        let mut pairs = Vec::with_capacity(n - 1);
        for (j, conj) in msg.conjugates.iter().enumerate() {
            let base = NormalForm::from_factor(CanonicalFactor::generator(n, j + 1)?);
            pairs.push((base, conj.clone()));
        }
        Ok(AttackInstance::new(n, pairs))
    }

    /// Instance targeting the initiator's key of a recorded transcript.
    pub fn from_transcript(t: &TranscriptFile) -> Result<Self, AttackError> {
        Self::from_message(&t.msg_a)
    }

    /// Benchmark instance with a known conjugator.
    pub fn planted(n: usize, conjugator: &BraidWord) -> Result<Self, AttackError> {
        let msg = aag_protocol::commit_word(n, conjugator, aag_protocol::Role::A)?;
        let mut inst = Self::from_message(&msg)?;
        inst.planted = Some(conjugator.clone());
        Ok(inst)
    }

    /// True iff `candidate` maps every base to its conjugated partner.
    pub fn verify_candidate(&self, candidate: &BraidWord) -> bool {
        self.pairs.iter().all(|(base, conj)| {
            base.conjugate(candidate)
                .map(|got| got == *conj)
                .unwrap_or(false)
        })
    }

    /// Normal form of `candidate * planted^{-1}` when the ground truth is
    /// known: the ambiguity left over after a successful attack.
    pub fn residual(&self, candidate: &BraidWord) -> Option<NormalForm> {
        self.planted.as_ref().map(|p| {
            normalize(&candidate.concat(&p.inverse()).expect("same strand count"))
        })
    }
}
