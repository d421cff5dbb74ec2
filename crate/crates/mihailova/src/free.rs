//! Words in the free group `F_2` on generators `u` and `t`, and pairs of
//! them (elements of `F_2 x F_2`).

use std::fmt;

use crate::error::MihailovaError;

/// A free generator of `F_2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FreeGen {
    U,
    T,
}

/// A freely reduced word over `{u, t}` with signs.
///
/// Text form: one character per letter, lowercase positive, uppercase
/// inverse — `"tUt"` is `t u^{-1} t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord {
    letters: Vec<(FreeGen, i8)>,
}

impl FreeWord {
    pub fn empty() -> Self {
        FreeWord::default()
    }

    pub fn new(letters: Vec<(FreeGen, i8)>) -> Self {
        FreeWord { letters }.reduce()
    }

    pub fn parse(text: &str) -> Result<Self, MihailovaError> {
        let mut letters = Vec::with_capacity(text.len());
        for ch in text.chars() {
            let letter = match ch {
                'u' => (FreeGen::U, 1),
                't' => (FreeGen::T, 1),
                'U' => (FreeGen::U, -1),
                'T' => (FreeGen::T, -1),
                c if c.is_whitespace() => continue,
                _ => return Err(MihailovaError::FreeWordParse(text.to_string())),
            };
            letters.push(letter);
        }
        Ok(FreeWord { letters }.reduce())
    }

    fn reduce(self) -> Self {
        let mut stack: Vec<(FreeGen, i8)> = Vec::with_capacity(self.letters.len());
        for (g, s) in self.letters {
            if let Some(&(tg, ts)) = stack.last() {
                if tg == g && ts == -s {
                    stack.pop();
                    continue;
                }
            }
            stack.push((g, s));
        }
        FreeWord { letters: stack }
    }

    pub fn letters(&self) -> &[(FreeGen, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|&(g, s)| (g, -s)).collect(),
        }
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        FreeWord { letters }.reduce()
    }

    pub fn render(&self) -> String {
        self.letters
            .iter()
            .map(|&(g, s)| match (g, s > 0) {
                (FreeGen::U, true) => 'u',
                (FreeGen::U, false) => 'U',
                (FreeGen::T, true) => 't',
                (FreeGen::T, false) => 'T',
            })
            .collect()
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// An element of `F_2 x F_2` as a pair of freely reduced words.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FreePairWord {
    pub left: FreeWord,
    pub right: FreeWord,
}

impl FreePairWord {
    pub fn new(left: FreeWord, right: FreeWord) -> Self {
        FreePairWord { left, right }
    }

    /// `(w, w)` — an element of the diagonal.
    pub fn diagonal(w: FreeWord) -> Self {
        FreePairWord {
            left: w.clone(),
            right: w,
        }
    }

    pub fn concat(&self, other: &FreePairWord) -> FreePairWord {
        FreePairWord {
            left: self.left.concat(&other.left),
            right: self.right.concat(&other.right),
        }
    }
}
