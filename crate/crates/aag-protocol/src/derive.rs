//! Shared-key derivation by letter substitution.
//!
//! Each party rebuilds the other party's conjugate of its own key by
//! substituting the received conjugates for the generators in its private
//! word, then forms the commutator `x^{-1} y^{-1} x y`. Runs of equal
//! letters (ubiquitous here, since subgroup generators are squares) are
//! substituted through cached squares.

use braid_core::{BraidWord, NormalForm};
use mihailova::PrivateKey;
use sha2::{Digest, Sha256, Sha512};

use crate::error::ProtocolError;
use crate::message::{ProtocolMessage, Role};

/// Digest algorithm for shared-key fingerprints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DigestAlg {
    #[default]
    Sha256,
    Sha512,
}

/// The derived shared key: the commutator of the two private keys, with a
/// digest of its canonical serialization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharedKey {
    pub nf: NormalForm,
    pub digest: Vec<u8>,
}

impl SharedKey {
    pub fn new(nf: NormalForm) -> Self {
        Self::with_digest(nf, DigestAlg::Sha256)
    }

    pub fn with_digest(nf: NormalForm, alg: DigestAlg) -> Self {
        debug_assert_eq!(nf.exponent_sum(), 0, "commutators abelianize to zero");
        let digest = digest_nf(&nf, alg);
        SharedKey { nf, digest }
    }

    pub fn digest_hex(&self) -> String {
        hex::encode(&self.digest)
    }
}

pub fn digest_nf(nf: &NormalForm, alg: DigestAlg) -> Vec<u8> {
    let bytes = nf.canonical_json();
    match alg {
        DigestAlg::Sha256 => Sha256::digest(bytes.as_bytes()).to_vec(),
        DigestAlg::Sha512 => Sha512::digest(bytes.as_bytes()).to_vec(),
    }
}

/// Substitutes `conjugates[j]` for each letter `sigma_j^{+-1}` of `word`
/// and multiplies out.
///
/// Maximal runs of a repeated letter become cached powers (squared
/// generators make runs of two the common case), and the pieces are
/// combined by a balanced product tree, which keeps intermediate normal
/// forms small.
pub fn substitute(word: &BraidWord, conjugates: &[NormalForm]) -> Result<NormalForm, ProtocolError> {
    let n = word.n();
    if conjugates.len() != n - 1 {
        return Err(ProtocolError::WrongConjugateCount {
            expected: n - 1,
            got: conjugates.len(),
        });
    }

    // power cache: (letter, k) -> conjugate(letter)^(2^k)
    let mut cache: std::collections::HashMap<(i32, u32), NormalForm> = std::collections::HashMap::new();
    fn pow2_piece(
        letter: i32,
        k: u32,
        conjugates: &[NormalForm],
        cache: &mut std::collections::HashMap<(i32, u32), NormalForm>,
    ) -> Result<NormalForm, ProtocolError> {
        if let Some(p) = cache.get(&(letter, k)) {
            return Ok(p.clone());
        }
        let piece = if k == 0 {
            let base = &conjugates[letter.unsigned_abs() as usize - 1];
            if letter > 0 {
                base.clone()
            } else {
                base.invert()
            }
        } else {
            let half = pow2_piece(letter, k - 1, conjugates, cache)?;
            half.multiply(&half)?
        };
        cache.insert((letter, k), piece.clone());
        Ok(piece)
    }

    let letters = word.letters();
    let mut pieces: Vec<NormalForm> = Vec::new();
    let mut p = 0;
    while p < letters.len() {
        let l = letters[p];
        let mut run = 1usize;
        while p + run < letters.len() && letters[p + run] == l {
            run += 1;
        }
        p += run;
        let mut remaining = run as u64;
        let mut k = 0u32;
        while remaining > 0 {
            if remaining & 1 == 1 {
                pieces.push(pow2_piece(l, k, conjugates, &mut cache)?);
            }
            remaining >>= 1;
            k += 1;
        }
    }

    tree_product(n, pieces)
}

fn tree_product(n: usize, mut pieces: Vec<NormalForm>) -> Result<NormalForm, ProtocolError> {
    if pieces.is_empty() {
        return Ok(NormalForm::identity(n));
    }
    while pieces.len() > 1 {
        let mut next = Vec::with_capacity(pieces.len().div_ceil(2));
        let mut i = 0;
        while i + 1 < pieces.len() {
            next.push(pieces[i].multiply(&pieces[i + 1])?);
            i += 2;
        }
        if i < pieces.len() {
            next.push(pieces.pop().expect("odd tail"));
        }
        pieces = next;
    }
    Ok(pieces.pop().expect("nonempty"))
}

fn check_peer(key: &PrivateKey, m: &ProtocolMessage, expected: Role) -> Result<(), ProtocolError> {
    if m.n != key.n {
        return Err(ProtocolError::StrandMismatch {
            left: key.n,
            right: m.n,
        });
    }
    if m.role != expected {
        return Err(ProtocolError::RoleMismatch {
            expected: expected.as_str().to_string(),
            got: m.role.as_str().to_string(),
        });
    }
    Ok(())
}

/// Initiator derivation: substitute the responder's conjugates into the
/// initiator word to get `y^{-1} x y`, then left-multiply by `x^{-1}`.
pub fn derive_key_initiator(
    x: &PrivateKey,
    from_b: &ProtocolMessage,
) -> Result<SharedKey, ProtocolError> {
    check_peer(x, from_b, Role::B)?;
    let conjugated = substitute(&x.expansion, &from_b.conjugates)?;
    let k = x.nf.invert().multiply(&conjugated)?;
    Ok(SharedKey::new(k))
}

/// Initiator derivation from a raw expansion word instead of a key.
/// Used by the attack harness, which plants arbitrary conjugators.
pub fn derive_key_initiator_raw(
    x_word: &braid_core::BraidWord,
    from_b: &ProtocolMessage,
) -> Result<SharedKey, ProtocolError> {
    if from_b.n != x_word.n() {
        return Err(ProtocolError::StrandMismatch {
            left: x_word.n(),
            right: from_b.n,
        });
    }
    if from_b.role != Role::B {
        return Err(ProtocolError::RoleMismatch {
            expected: Role::B.as_str().to_string(),
            got: from_b.role.as_str().to_string(),
        });
    }
    let conjugated = substitute(x_word, &from_b.conjugates)?;
    let k = braid_core::normalize(x_word).invert().multiply(&conjugated)?;
    Ok(SharedKey::new(k))
}

/// Responder derivation: substitute the initiator's conjugates into the
/// responder word to get `x^{-1} y x`, then `(y^{-1} x^{-1} y x)^{-1}`.
pub fn derive_key_responder(
    y: &PrivateKey,
    from_a: &ProtocolMessage,
) -> Result<SharedKey, ProtocolError> {
    check_peer(y, from_a, Role::A)?;
    let conjugated = substitute(&y.expansion, &from_a.conjugates)?;
    let k = y.nf.invert().multiply(&conjugated)?.invert();
    Ok(SharedKey::new(k))
}
