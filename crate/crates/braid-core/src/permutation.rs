//! Permutations of `{1, ..., n}` stored as image arrays.
//!
//! Internally images are 0-indexed; everything crossing the public API
//! (construction, `images`, serialization) is 1-indexed.

use crate::error::BraidError;

/// A permutation of `{1, ..., n}`.
///
/// `apply(i)` is the image of strand `i`. Composition follows word order:
/// `a.then(b)` is "apply `a`, then `b`", matching concatenation of braid
/// words under the projection to the symmetric group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    map: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            map: (0..n as u8).collect(),
        }
    }

    /// The order-reversing permutation `i -> n + 1 - i`.
    pub fn reversal(n: usize) -> Self {
        Permutation {
            map: (0..n as u8).rev().collect(),
        }
    }

    /// The transposition swapping `i` and `i + 1` (1-indexed, `1 <= i < n`).
    pub fn transposition(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.map.swap(i - 1, i);
        p
    }

    /// Builds a permutation from a 1-indexed image array.
    pub fn from_images(images: &[usize]) -> Result<Self, BraidError> {
        let n = images.len();
        if n > MAX_STRANDS {
            return Err(BraidError::StrandCountTooLarge(n));
        }
        let mut seen = vec![false; n];
        let mut map = Vec::with_capacity(n);
        for &v in images {
            if v < 1 || v > n || seen[v - 1] {
                return Err(BraidError::NotAPermutation { len: n });
            }
            seen[v - 1] = true;
            map.push((v - 1) as u8);
        }
        Ok(Permutation { map })
    }

    /// The 1-indexed image array.
    pub fn images(&self) -> Vec<usize> {
        self.map.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn n(&self) -> usize {
        self.map.len()
    }

    /// Image of `i` (1-indexed in, 1-indexed out).
    pub fn apply(&self, i: usize) -> usize {
        self.map[i - 1] as usize + 1
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| v as usize == i)
    }

    /// Composition in word order: `(a.then(b))(i) = b(a(i))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.n(), other.n());
        Permutation {
            map: self.map.iter().map(|&v| other.map[v as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut map = vec![0u8; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            map[v as usize] = i as u8;
        }
        Permutation { map }
    }

    /// Number of inversions: pairs `i < j` with `p(i) > p(j)`.
    pub fn inversions(&self) -> usize {
        let n = self.map.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.map[i] > self.map[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Bitmask of descent positions: bit `i` (0-indexed) set iff
    /// `p(i+1) > p(i+2)` in 1-indexed terms.
    pub(crate) fn descent_mask(&self) -> u64 {
        let mut mask = 0u64;
        for i in 0..self.map.len().saturating_sub(1) {
            if self.map[i] > self.map[i + 1] {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Descents of the inverse, computed without materializing it.
    pub(crate) fn inverse_descent_mask(&self) -> u64 {
        let mut pos = vec![0u8; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            pos[v as usize] = i as u8;
        }
        let mut mask = 0u64;
        for i in 0..self.map.len().saturating_sub(1) {
            if pos[i] > pos[i + 1] {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// In-place left multiplication by the transposition at 0-indexed
    /// position `i`: removes a leading `sigma_{i+1}` from the word.
    pub(crate) fn swap_positions(&mut self, i: usize) {
        self.map.swap(i, i + 1);
    }

    pub(crate) fn as_slice(&self) -> &[u8] {
        &self.map
    }

    pub(crate) fn from_map(map: Vec<u8>) -> Self {
        Permutation { map }
    }
}

/// Largest strand count the allocation-free engine paths support.
pub(crate) const MAX_STRANDS: usize = 64;

/// Descent bitmask of a raw image slice.
pub(crate) fn descent_mask_of(p: &[u8]) -> u64 {
    let mut mask = 0u64;
    for i in 0..p.len().saturating_sub(1) {
        if p[i] > p[i + 1] {
            mask |= 1 << i;
        }
    }
    mask
}

/// Writes the inverse of `p` into `out[..p.len()]`.
pub(crate) fn fill_inverse(p: &[u8], out: &mut [u8]) {
    for (i, &v) in p.iter().enumerate() {
        out[v as usize] = i as u8;
    }
}
