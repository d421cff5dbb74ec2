//! Ingestion of relator words for the non-diagonal Mihailova generators.
//!
//! The words are external data: we load them from a file rather than
//! fabricating them. With no relator file present the toolkit runs in
//! diagonal-only mode, using just the two diagonal generators, which are
//! subgroup members by definition.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::MihailovaError;
use crate::free::FreeWord;

/// An ordered list of relator-derived words over `{u, t}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelatorSet {
    pub source: String,
    pub s_words: Vec<FreeWord>,
}

#[derive(Serialize, Deserialize)]
struct RelatorFile {
    source: String,
    s_words: Vec<String>,
}

impl RelatorSet {
    /// No relator words: only the diagonal generators are used.
    pub fn diagonal_only() -> Self {
        RelatorSet {
            source: "diagonal-only".to_string(),
            s_words: Vec::new(),
        }
    }

    pub fn is_diagonal_only(&self) -> bool {
        self.s_words.is_empty()
    }

    pub fn from_words(source: &str, words: Vec<FreeWord>) -> Self {
        RelatorSet {
            source: source.to_string(),
            s_words: words,
        }
    }

    /// Parses the relator file format
    /// `{"source": "...", "s_words": ["tUt", ...]}`.
    /// Empty input means diagonal-only mode.
    pub fn from_json(text: &str) -> Result<Self, MihailovaError> {
        if text.trim().is_empty() {
            return Ok(Self::diagonal_only());
        }
        let file: RelatorFile =
            serde_json::from_str(text).map_err(|e| MihailovaError::Malformed(e.to_string()))?;
        let mut s_words = Vec::with_capacity(file.s_words.len());
        for w in &file.s_words {
            let word = FreeWord::parse(w)?;
            if word.is_empty() {
                return Err(MihailovaError::Malformed(format!(
                    "relator word {w:?} reduces to the identity"
                )));
            }
            s_words.push(word);
        }
        Ok(RelatorSet {
            source: file.source,
            s_words,
        })
    }

    /// Loads a relator file; a missing path means diagonal-only mode.
    pub fn load(path: Option<&Path>) -> Result<Self, MihailovaError> {
        match path {
            None => Ok(Self::diagonal_only()),
            Some(p) => Self::from_json(&std::fs::read_to_string(p)?),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&RelatorFile {
            source: self.source.clone(),
            s_words: self.s_words.iter().map(|w| w.render()).collect(),
        })
        .expect("serializable")
    }
}
