//! Protocol messages and their canonical wire encoding.
//!
//! A commitment message carries the sender's conjugates of all `n-1`
//! Artin generators by their private key. The wire form is canonical and
//! bit-exact: UTF-8 JSON with no whitespace and fields in exactly this
//! order:
//!
//! `{"v":1,"n":8,"role":"A","conj":[{"inf":-2,"factors":[[2,1,3,4,5,6,7,8],...]},...]}`
//!
//! Permutations are 1-indexed image arrays of length `n`. Decoding is
//! strict: wrong version, wrong conjugate count, non-bijective image
//! arrays, factor sequences not in normal form, or conjugates with
//! exponent sum other than 1 are all rejected.

use braid_core::{normalize, BraidWord, CanonicalFactor, NormalForm, Permutation};
use mihailova::PrivateKey;
use serde::Deserialize;

use crate::error::ProtocolError;

pub const WIRE_VERSION: u64 = 1;

/// Sender role in a two-party session.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    A,
    B,
}

impl Role {
    pub fn as_str(&self) -> &'static str {
        match self {
            Role::A => "A",
            Role::B => "B",
        }
    }

    pub fn other(&self) -> Role {
        match self {
            Role::A => Role::B,
            Role::B => Role::A,
        }
    }
}

impl std::fmt::Display for Role {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A commitment message: the normal forms of `k^{-1} sigma_j k` for
/// `j = 1..n-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProtocolMessage {
    pub n: usize,
    pub role: Role,
    pub conjugates: Vec<NormalForm>,
}

/// Conjugates every Artin generator by an arbitrary word. The engine
/// behind [`commit`]; also used by tests and the attack harness to build
/// messages from raw conjugator words.
pub fn commit_word(n: usize, conjugator: &BraidWord, role: Role) -> Result<ProtocolMessage, ProtocolError> {
    if conjugator.n() != n {
        return Err(ProtocolError::StrandMismatch {
            left: n,
            right: conjugator.n(),
        });
    }
    let k_nf = normalize(conjugator);
    let k_inv = k_nf.invert();
    let mut conjugates = Vec::with_capacity(n - 1);
    for j in 1..n {
        let gen = NormalForm::from_factor(CanonicalFactor::generator(n, j)?);
        conjugates.push(k_inv.multiply(&gen)?.multiply(&k_nf)?);
    }
    Ok(ProtocolMessage { n, role, conjugates })
}

/// Builds the commitment message for a private key.
pub fn commit(key: &PrivateKey, role: Role) -> Result<ProtocolMessage, ProtocolError> {
    commit_word(key.n, &key.expansion, role)
}

impl ProtocolMessage {
    /// Canonical, bit-exact encoding.
    pub fn encode(&self) -> String {
        let mut s = String::new();
        s.push_str("{\"v\":1,\"n\":");
        s.push_str(&self.n.to_string());
        s.push_str(",\"role\":\"");
        s.push_str(self.role.as_str());
        s.push_str("\",\"conj\":[");
        for (i, c) in self.conjugates.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(&c.canonical_json());
        }
        s.push_str("]}");
        s
    }

    /// Strict decoder for the wire format.
    pub fn decode(text: &str) -> Result<Self, ProtocolError> {
        let wire: WireMessage =
            serde_json::from_str(text).map_err(|e| ProtocolError::Malformed(e.to_string()))?;
        wire.validate()
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct WireMessage {
    v: u64,
    n: usize,
    role: String,
    conj: Vec<WireNf>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct WireNf {
    inf: i64,
    factors: Vec<Vec<usize>>,
}

impl WireNf {
    fn validate(&self, n: usize) -> Result<NormalForm, ProtocolError> {
        let mut factors = Vec::with_capacity(self.factors.len());
        for images in &self.factors {
            if images.len() != n {
                return Err(ProtocolError::Malformed(format!(
                    "factor has {} entries, expected {}",
                    images.len(),
                    n
                )));
            }
            let p = Permutation::from_images(images)?;
            let f = CanonicalFactor::from_permutation(p);
            if f.is_eps() || f.is_delta() {
                return Err(ProtocolError::Malformed(
                    "factor sequence contains a trivial or Delta factor".to_string(),
                ));
            }
            factors.push(f);
        }
        let nf = NormalForm::from_parts(n, self.inf, factors.clone());
        if nf.inf() != self.inf || nf.factors() != factors.as_slice() {
            return Err(ProtocolError::Malformed(
                "factor sequence is not left-weighted".to_string(),
            ));
        }
        Ok(nf)
    }
}

impl WireMessage {
    fn validate(self) -> Result<ProtocolMessage, ProtocolError> {
        if self.v != WIRE_VERSION {
            return Err(ProtocolError::UnsupportedVersion(self.v));
        }
        if self.n < 2 {
            return Err(ProtocolError::Malformed(format!(
                "strand count {} too small",
                self.n
            )));
        }
        let role = match self.role.as_str() {
            "A" => Role::A,
            "B" => Role::B,
            other => {
                return Err(ProtocolError::Malformed(format!("unknown role {other:?}")));
            }
        };
        if self.conj.len() != self.n - 1 {
            return Err(ProtocolError::WrongConjugateCount {
                expected: self.n - 1,
                got: self.conj.len(),
            });
        }
        let mut conjugates = Vec::with_capacity(self.conj.len());
        for wire_nf in &self.conj {
            let nf = wire_nf.validate(self.n)?;
            // conjugates of single generators abelianize to 1
            if nf.exponent_sum() != 1 {
                return Err(ProtocolError::Malformed(format!(
                    "conjugate has exponent sum {}, expected 1",
                    nf.exponent_sum()
                )));
            }
            conjugates.push(nf);
        }
        Ok(ProtocolMessage {
            n: self.n,
            role,
            conjugates,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use mihailova::{sample_key, RelatorSet};

    #[test]
    fn empty_conjugator_commits_the_generators() {
        let m = commit_word(4, &BraidWord::empty(4), Role::A).unwrap();
        assert_eq!(m.conjugates.len(), 3);
        for (j, c) in m.conjugates.iter().enumerate() {
            let gen = BraidWord::new(4, vec![j as i32 + 1]).unwrap();
            assert_eq!(*c, normalize(&gen));
        }
    }

    #[test]
    fn conjugates_have_exponent_sum_one() {
        let w = BraidWord::new(6, vec![1, 1, -3, 2]).unwrap();
        let m = commit_word(6, &w, Role::B).unwrap();
        for c in &m.conjugates {
            assert_eq!(c.exponent_sum(), 1);
        }
    }

    #[test]
    fn commit_matches_direct_conjugation() {
        let w = BraidWord::new(6, vec![1, 1]).unwrap();
        let m = commit_word(6, &w, Role::A).unwrap();
        let direct = normalize(&BraidWord::new(6, vec![-1, -1, 2, 1, 1]).unwrap());
        assert_eq!(m.conjugates[1], direct);
    }

    #[test]
    fn encode_decode_round_trip() {
        let key = sample_key(8, 1, 8, 42, &RelatorSet::diagonal_only()).unwrap();
        let m = commit(&key, Role::A).unwrap();
        let text = m.encode();
        assert!(text.starts_with("{\"v\":1,\"n\":8,\"role\":\"A\",\"conj\":["));
        assert!(!text.contains(' '));
        let back = ProtocolMessage::decode(&text).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn decode_rejects_bad_documents() {
        let key = sample_key(8, 1, 4, 1, &RelatorSet::diagonal_only()).unwrap();
        let text = commit(&key, Role::A).unwrap().encode();

        let v2 = text.replace("\"v\":1", "\"v\":2");
        assert!(matches!(
            ProtocolMessage::decode(&v2),
            Err(ProtocolError::UnsupportedVersion(2))
        ));

        // a non-bijective image array
        let first_factor_start = text.find("[[").unwrap();
        let mut tampered = text.clone();
        tampered.replace_range(
            first_factor_start..first_factor_start + 4,
            "[[1,1",
        );
        assert!(ProtocolMessage::decode(&tampered).is_err());

        assert!(ProtocolMessage::decode("{}").is_err());
        assert!(ProtocolMessage::decode("garbage").is_err());
    }

    #[test]
    fn decode_rejects_wrong_conjugate_count() {
        let m = commit_word(3, &BraidWord::new(3, vec![1]).unwrap(), Role::A).unwrap();
        let mut text = m.encode();
        // claim n=4 while carrying 2 conjugates
        text = text.replace("\"n\":3", "\"n\":4");
        assert!(ProtocolMessage::decode(&text).is_err());
    }

    #[test]
    fn decode_rejects_wrong_exponent_sums() {
        // sigma_1 sigma_2 as a single valid factor has exponent sum 2
        let text = r#"{"v":1,"n":3,"role":"A","conj":[{"inf":0,"factors":[[3,1,2]]},{"inf":0,"factors":[[1,3,2]]}]}"#;
        assert!(matches!(
            ProtocolMessage::decode(text),
            Err(ProtocolError::Malformed(m)) if m.contains("exponent sum")
        ));
    }

    #[test]
    fn decode_rejects_unweighted_factor_sequences() {
        // sigma_2 then sigma_1 in B_3 as separate factors is not
        // left-weighted (their product is, as a single factor)
        let text = r#"{"v":1,"n":3,"role":"A","conj":[{"inf":0,"factors":[[1,3,2],[2,1,3]]},{"inf":0,"factors":[[1,3,2]]}]}"#;
        assert!(matches!(
            ProtocolMessage::decode(text),
            Err(ProtocolError::Malformed(_))
        ));
    }
}
