//! Private keys: random words over a Mihailova generator list, with their
//! Artin-letter expansion and normal form.

use std::path::Path;

use braid_core::{normalize, BraidWord, NormalForm};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::MihailovaError;
use crate::free::{FreeGen, FreeWord};
use crate::relators::RelatorSet;
use crate::subgroup::{check_indices, mihailova_generators};

const SAMPLE_RETRY_BUDGET: usize = 64;

/// A private key for the key exchange: a freely reduced word in the
/// generators of `M(G_i)`, expanded to Artin letters and normalized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrivateKey {
    pub n: usize,
    pub i: usize,
    /// Letters over the generator list: `(generator id, sign)`.
    pub gen_word: Vec<(usize, i8)>,
    /// Concatenated Artin-letter expansions of `gen_word`.
    pub expansion: BraidWord,
    /// Normal form of the expansion; never the identity.
    pub nf: NormalForm,
}

impl PrivateKey {
    /// Rebuilds expansion and normal form from a generator word.
    /// Identity-valued words are rejected as degenerate.
    pub fn from_gen_word(
        n: usize,
        i: usize,
        gen_word: Vec<(usize, i8)>,
        relators: &RelatorSet,
    ) -> Result<Self, MihailovaError> {
        let key = Self::from_gen_word_unchecked(n, i, gen_word, relators)?;
        if key.nf.is_identity() {
            return Err(MihailovaError::IdentityKey);
        }
        Ok(key)
    }

    fn from_gen_word_unchecked(
        n: usize,
        i: usize,
        gen_word: Vec<(usize, i8)>,
        relators: &RelatorSet,
    ) -> Result<Self, MihailovaError> {
        check_indices(n, i)?;
        if gen_word.is_empty() {
            return Err(MihailovaError::EmptyKey);
        }
        let generators = mihailova_generators(n, i, relators)?;
        let mut expansion = BraidWord::empty(n);
        for &(id, sign) in &gen_word {
            let base = generators
                .get(id)
                .ok_or(MihailovaError::GeneratorIdOutOfRange(id, generators.len()))?;
            let piece = if sign >= 0 { base.clone() } else { base.inverse() };
            expansion = expansion.concat(&piece)?;
        }
        let nf = normalize(&expansion);
        Ok(PrivateKey {
            n,
            i,
            gen_word,
            expansion,
            nf,
        })
    }

    /// Hex digest of the canonical normal-form serialization; the `check`
    /// field of the key file.
    pub fn check_digest(&self) -> String {
        hex::encode(Sha256::digest(self.nf.canonical_json().as_bytes()))
    }
}

/// Draws a freely reduced word of exactly `length` letters over the
/// generator list and packages it as a key. Identity-valued samples are
/// rejected and resampled a bounded number of times. Deterministic for a
/// fixed seed.
pub fn sample_key(
    n: usize,
    i: usize,
    length: usize,
    seed: u64,
    relators: &RelatorSet,
) -> Result<PrivateKey, MihailovaError> {
    check_indices(n, i)?;
    if length == 0 {
        return Err(MihailovaError::EmptyKey);
    }
    let generators = mihailova_generators(n, i, relators)?;
    let g = generators.len();
    let mut rng = StdRng::seed_from_u64(seed);

    for _ in 0..SAMPLE_RETRY_BUDGET {
        let mut gen_word: Vec<(usize, i8)> = Vec::with_capacity(length);
        while gen_word.len() < length {
            let id = rng.gen_range(0..g);
            let sign: i8 = if rng.gen_bool(0.5) { 1 } else { -1 };
            if let Some(&(pid, psign)) = gen_word.last() {
                if pid == id && psign == -sign {
                    continue; // would cancel; redraw
                }
            }
            gen_word.push((id, sign));
        }
        match PrivateKey::from_gen_word(n, i, gen_word, relators) {
            Ok(key) => return Ok(key),
            Err(MihailovaError::IdentityKey) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(MihailovaError::RetryBudgetExhausted)
}

#[derive(Serialize, Deserialize)]
struct KeyFile {
    v: u32,
    n: usize,
    i: usize,
    gen_word: Vec<(usize, i8)>,
    seed: u64,
    check: String,
}

/// Serializes a key to the key file format. `seed` is recorded for
/// provenance only; the generator word is authoritative.
pub fn encode_key(key: &PrivateKey, seed: u64) -> String {
    serde_json::to_string(&KeyFile {
        v: 1,
        n: key.n,
        i: key.i,
        gen_word: key.gen_word.clone(),
        seed,
        check: key.check_digest(),
    })
    .expect("serializable")
}

/// Parses a key file, recomputes the expansion under the given relator
/// set, and verifies the stored check digest.
pub fn decode_key(text: &str, relators: &RelatorSet) -> Result<PrivateKey, MihailovaError> {
    let file: KeyFile =
        serde_json::from_str(text).map_err(|e| MihailovaError::Malformed(e.to_string()))?;
    if file.v != 1 {
        return Err(MihailovaError::UnsupportedVersion(file.v));
    }
    let key = PrivateKey::from_gen_word(file.n, file.i, file.gen_word, relators)?;
    let computed = key.check_digest();
    if computed != file.check {
        return Err(MihailovaError::CheckMismatch {
            expected: file.check,
            computed,
        });
    }
    Ok(key)
}

pub fn save_key(key: &PrivateKey, seed: u64, path: &Path) -> Result<(), MihailovaError> {
    std::fs::write(path, encode_key(key, seed))?;
    Ok(())
}

pub fn load_key(path: &Path, relators: &RelatorSet) -> Result<PrivateKey, MihailovaError> {
    decode_key(&std::fs::read_to_string(path)?, relators)
}

/// Splits a diagonal-mode expansion back into its two component words:
/// letters with index in `{i, i+1}` map to `{u, t}` on the left, letters
/// in `{i+3, i+4}` to `{u, t}` on the right. Returns `None` when the
/// expansion is not a sequence of squared generators of `G_i`.
pub fn diagonal_components(key: &PrivateKey) -> Option<(FreeWord, FreeWord)> {
    let mut left = Vec::new();
    let mut right = Vec::new();
    let letters = key.expansion.letters();
    if !letters.len().is_multiple_of(2) {
        return None;
    }
    for pair in letters.chunks(2) {
        if pair[0] != pair[1] {
            return None;
        }
        let idx = pair[0].unsigned_abs() as usize;
        let sign: i8 = if pair[0] > 0 { 1 } else { -1 };
        let (side, gen) = if idx == key.i {
            (&mut left, FreeGen::U)
        } else if idx == key.i + 1 {
            (&mut left, FreeGen::T)
        } else if idx == key.i + 3 {
            (&mut right, FreeGen::U)
        } else if idx == key.i + 4 {
            (&mut right, FreeGen::T)
        } else {
            return None;
        };
        side.push((gen, sign));
    }
    Some((FreeWord::new(left), FreeWord::new(right)))
}
