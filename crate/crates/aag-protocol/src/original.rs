//! The classic commutator key-exchange over arbitrary public generator
//! sets, kept as the baseline the reformed scheme specializes.
//!
//! Public data: two tuples of braid words `S_A = (s_1..s_m)` and
//! `S_B = (t_1..t_k)`. Alice picks a word `u` over `S_A`, sends all
//! `u^{-1} t_j u`; Bob picks `v` over `S_B`, sends all `v^{-1} s_i v`;
//! both form the commutator `u^{-1} v^{-1} u v` by substitution.

use braid_core::{normalize, BraidWord, NormalForm};

use crate::derive::SharedKey;
use crate::error::ProtocolError;

/// Transcript of one run of the baseline scheme.
#[derive(Debug, Clone)]
pub struct OriginalTranscript {
    /// `u^{-1} t_j u` for every public generator of Bob's set.
    pub to_bob: Vec<NormalForm>,
    /// `v^{-1} s_i v` for every public generator of Alice's set.
    pub to_alice: Vec<NormalForm>,
    pub key_a: SharedKey,
    pub key_b: SharedKey,
}

impl OriginalTranscript {
    pub fn matched(&self) -> bool {
        self.key_a == self.key_b
    }
}

fn expand(
    n: usize,
    publics: &[BraidWord],
    word: &[(usize, i8)],
) -> Result<BraidWord, ProtocolError> {
    let mut out = BraidWord::empty(n);
    for &(idx, sign) in word {
        let base = publics
            .get(idx)
            .ok_or(ProtocolError::PublicIndexOutOfRange(idx))?;
        let piece = if sign >= 0 { base.clone() } else { base.inverse() };
        out = out.concat(&piece)?;
    }
    Ok(out)
}

fn conjugate_all(
    publics: &[BraidWord],
    by: &NormalForm,
    by_inv: &NormalForm,
) -> Result<Vec<NormalForm>, ProtocolError> {
    publics
        .iter()
        .map(|p| Ok(by_inv.multiply(&normalize(p))?.multiply(by)?))
        .collect()
}

fn substitute_indexed(
    n: usize,
    word: &[(usize, i8)],
    conjugates: &[NormalForm],
) -> Result<NormalForm, ProtocolError> {
    let mut acc = NormalForm::identity(n);
    for &(idx, sign) in word {
        let base = conjugates
            .get(idx)
            .ok_or(ProtocolError::PublicIndexOutOfRange(idx))?;
        let piece = if sign >= 0 { base.clone() } else { base.invert() };
        acc = acc.multiply(&piece)?;
    }
    Ok(acc)
}

/// Executes the baseline protocol. `u_word` indexes into `s_a`, `v_word`
/// into `s_b`; both use `(index, sign)` letters.
pub fn run_original_aag(
    n: usize,
    s_a: &[BraidWord],
    s_b: &[BraidWord],
    u_word: &[(usize, i8)],
    v_word: &[(usize, i8)],
) -> Result<OriginalTranscript, ProtocolError> {
    let u = normalize(&expand(n, s_a, u_word)?);
    let v = normalize(&expand(n, s_b, v_word)?);
    let u_inv = u.invert();
    let v_inv = v.invert();

    let to_bob = conjugate_all(s_b, &u, &u_inv)?;
    let to_alice = conjugate_all(s_a, &v, &v_inv)?;

    // Alice: u^{-1} * u(v^{-1} s v) = u^{-1} v^{-1} u v
    let key_a = SharedKey::new(u_inv.multiply(&substitute_indexed(n, u_word, &to_alice)?)?);
    // Bob: (v^{-1} * v(u^{-1} t u))^{-1}
    let key_b = SharedKey::new(
        v_inv
            .multiply(&substitute_indexed(n, v_word, &to_bob)?)?
            .invert(),
    );

    Ok(OriginalTranscript {
        to_bob,
        to_alice,
        key_a,
        key_b,
    })
}
