//! Words over the signed Artin generators of `B_n`.

use std::fmt;

use crate::error::BraidError;
use crate::permutation::Permutation;

/// A word over the Artin generators of `B_n`.
///
/// Letters are nonzero signed integers: `i` stands for `sigma_i`, `-i` for
/// its inverse, with `|i|` in `[1, n-1]`. The text form is the same letters
/// whitespace-separated, e.g. `"1 -2 3"`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    /// Validates and stores a letter sequence verbatim (no reduction).
    pub fn new<I>(n: usize, letters: I) -> Result<Self, BraidError>
    where
        I: IntoIterator<Item = i32>,
    {
        if n < 2 {
            return Err(BraidError::StrandCountTooSmall(n));
        }
        if n > crate::permutation::MAX_STRANDS {
            return Err(BraidError::StrandCountTooLarge(n));
        }
        let mut out = Vec::new();
        for l in letters {
            if l == 0 || l.unsigned_abs() as usize > n - 1 {
                return Err(BraidError::GeneratorOutOfRange {
                    index: l as i64,
                    max: n - 1,
                });
            }
            out.push(l);
        }
        Ok(BraidWord { n, letters: out })
    }

    pub fn empty(n: usize) -> Self {
        debug_assert!((2..=crate::permutation::MAX_STRANDS).contains(&n));
        BraidWord {
            n,
            letters: Vec::new(),
        }
    }

    /// The fundamental braid `Delta_n` as a positive word of length
    /// `n(n-1)/2`, built by the recursion
    /// `Delta_n = Delta_{n-1} sigma_{n-1} sigma_{n-2} ... sigma_1`.
    pub fn delta(n: usize) -> Result<Self, BraidError> {
        if n < 2 {
            return Err(BraidError::StrandCountTooSmall(n));
        }
        if n > crate::permutation::MAX_STRANDS {
            return Err(BraidError::StrandCountTooLarge(n));
        }
        let mut letters = Vec::with_capacity(n * (n - 1) / 2);
        for m in 2..=n {
            for j in (1..m).rev() {
                letters.push(j as i32);
            }
        }
        Ok(BraidWord { n, letters })
    }

    /// Parses the whitespace-separated signed-integer text form.
    pub fn parse(n: usize, text: &str) -> Result<Self, BraidError> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let v: i32 = tok
                .parse()
                .map_err(|_| BraidError::WordParse(tok.to_string()))?;
            letters.push(v);
        }
        BraidWord::new(n, letters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&l| l > 0)
    }

    /// Sum of letter signs; the image in the abelianization of `B_n`.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// Removes all adjacent inverse pairs. Braid relations are not applied.
    pub fn free_reduce(&self) -> BraidWord {
        let mut stack: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if stack.last() == Some(&-l) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        BraidWord {
            n: self.n,
            letters: stack,
        }
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.n != other.n {
            return Err(BraidError::StrandMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters })
    }

    pub fn push(&mut self, letter: i32) -> Result<(), BraidError> {
        if letter == 0 || letter.unsigned_abs() as usize > self.n - 1 {
            return Err(BraidError::GeneratorOutOfRange {
                index: letter as i64,
                max: self.n - 1,
            });
        }
        self.letters.push(letter);
        Ok(())
    }

    pub fn repeat(&self, times: usize) -> BraidWord {
        let mut letters = Vec::with_capacity(self.letters.len() * times);
        for _ in 0..times {
            letters.extend_from_slice(&self.letters);
        }
        BraidWord { n: self.n, letters }
    }

    /// Applies the flip automorphism `tau^k` (`sigma_i -> sigma_{n-i}`);
    /// only the parity of `k` matters.
    pub fn tau(&self, k: i64) -> BraidWord {
        if k.rem_euclid(2) == 0 {
            return self.clone();
        }
        let n = self.n as i32;
        BraidWord {
            n: self.n,
            letters: self
                .letters
                .iter()
                .map(|&l| if l > 0 { n - l } else { -(n + l) })
                .collect(),
        }
    }

    /// Image under the projection `B_n -> S_n` sending each generator to
    /// the transposition `(i, i+1)`; signs are ignored since transpositions
    /// are involutions.
    pub fn permutation(&self) -> Permutation {
        // pos_to_strand bookkeeping; the image map is its inverse
        let mut v = Permutation::identity(self.n);
        for &l in &self.letters {
            v.swap_positions(l.unsigned_abs() as usize - 1);
        }
        v.inverse()
    }

    pub fn render(&self) -> String {
        self.letters
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
