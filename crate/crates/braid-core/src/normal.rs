//! Left-weighted normal forms `Delta^k W_1 ... W_s`.
//!
//! Every element of `B_n` has a unique expression as a power of the
//! fundamental braid followed by a left-weighted sequence of canonical
//! factors, none of which is trivial or `Delta`. Equality of normal forms
//! is plain field equality, which decides the word problem.
//!
//! The engine below works on permutation lists. A word is first converted
//! letter by letter (`sigma_i` to its transposition factor, `sigma_i^{-1}`
//! to `Delta^{-1}` times the factor of `Delta sigma_i^{-1}`), all `Delta`
//! powers are pushed to the front through the flip automorphism, and then
//! adjacent factor pairs are rebalanced until every pair `(A, B)` satisfies
//! `starting_set(B) ⊆ finishing_set(A)`. Each rebalance moves the largest
//! passable prefix of `B` into `A`, so total work is quadratic in the
//! letter count.

use std::collections::VecDeque;
use std::fmt;

use crate::error::BraidError;
use crate::factor::CanonicalFactor;
use crate::permutation::Permutation;
use crate::word::BraidWord;

/// The left-weighted normal form of a braid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    n: usize,
    inf: i64,
    factors: Vec<CanonicalFactor>,
}

/// Computes the normal form of a word. Constant on the equivalence classes
/// of the Artin relations.
pub fn normalize(w: &BraidWord) -> NormalForm {
    let n = w.n();
    let w0 = Permutation::reversal(n);
    let mut inf = 0i64;
    let mut perms: Vec<Permutation> = Vec::with_capacity(w.len());
    // walk right to left so each factor picks up the flips of the
    // Delta^{-1}s that will be pushed past it
    let mut suffix_delta = 0i64;
    for &l in w.letters().iter().rev() {
        let i = l.unsigned_abs() as usize;
        let p = if l > 0 {
            Permutation::transposition(n, i)
        } else {
            w0.then(&Permutation::transposition(n, i))
        };
        perms.push(tau_perm(&p, suffix_delta, &w0));
        if l < 0 {
            suffix_delta -= 1;
            inf -= 1;
        }
    }
    perms.reverse();
    weight(n, inf, perms)
}

impl NormalForm {
    pub fn identity(n: usize) -> Self {
        NormalForm {
            n,
            inf: 0,
            factors: Vec::new(),
        }
    }

    /// `Delta^k` as a normal form.
    pub fn delta_power(n: usize, k: i64) -> Self {
        NormalForm {
            n,
            inf: k,
            factors: Vec::new(),
        }
    }

    /// A single canonical factor as a normal form.
    pub fn from_factor(f: CanonicalFactor) -> Self {
        let n = f.n();
        if f.is_eps() {
            Self::identity(n)
        } else if f.is_delta() {
            Self::delta_power(n, 1)
        } else {
            NormalForm {
                n,
                inf: 0,
                factors: vec![f],
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn inf(&self) -> i64 {
        self.inf
    }

    /// Canonical length: the number of factors. A length of zero means a
    /// pure power of `Delta`, not necessarily the identity.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    pub fn factors(&self) -> &[CanonicalFactor] {
        &self.factors
    }

    pub fn exponent_sum(&self) -> i64 {
        let half_twist = (self.n * (self.n - 1) / 2) as i64;
        self.inf * half_twist + self.factors.iter().map(|f| f.weight() as i64).sum::<i64>()
    }

    /// Letter count of `to_word()`: the shortest representative this
    /// normal form knows how to write down.
    pub fn word_length(&self) -> usize {
        let half_twist = self.n * (self.n - 1) / 2;
        self.inf.unsigned_abs() as usize * half_twist
            + self.factors.iter().map(|f| f.weight()).sum::<usize>()
    }

    pub fn multiply(&self, other: &NormalForm) -> Result<NormalForm, BraidError> {
        if self.n != other.n {
            return Err(BraidError::StrandMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let w0 = Permutation::reversal(self.n);
        let mut perms: Vec<Permutation> = Vec::with_capacity(self.factors.len() + other.factors.len());
        for f in &self.factors {
            perms.push(tau_perm(f.permutation(), other.inf, &w0));
        }
        for f in &other.factors {
            perms.push(f.permutation().clone());
        }
        Ok(weight(self.n, self.inf + other.inf, perms))
    }

    pub fn invert(&self) -> NormalForm {
        let w0 = Permutation::reversal(self.n);
        // (Delta^k W_1 ... W_s)^{-1} = (Delta^{-1} L_s) ... (Delta^{-1} L_1) Delta^{-k}
        // with L_i = Delta W_i^{-1}; flips accounted right to left
        let mut suffix_delta = -self.inf;
        let mut perms: Vec<Permutation> = Vec::with_capacity(self.factors.len());
        for f in self.factors.iter() {
            let l = w0.then(&f.permutation().inverse());
            perms.push(tau_perm(&l, suffix_delta, &w0));
            suffix_delta -= 1;
        }
        perms.reverse();
        weight(self.n, -self.inf - self.factors.len() as i64, perms)
    }

    /// Normal form of `g^{-1} self g`.
    pub fn conjugate(&self, g: &BraidWord) -> Result<NormalForm, BraidError> {
        let g_nf = normalize(g);
        g_nf.invert().multiply(self)?.multiply(&g_nf)
    }

    /// Decides the word problem: true iff both sides are field-for-field
    /// identical normal forms.
    pub fn equals(&self, other: &NormalForm) -> Result<bool, BraidError> {
        if self.n != other.n {
            return Err(BraidError::StrandMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(self == other)
    }

    /// Applies the flip automorphism `tau^k` factorwise (`Delta` is fixed).
    pub fn tau(&self, k: i64) -> NormalForm {
        if k.rem_euclid(2) == 0 {
            return self.clone();
        }
        NormalForm {
            n: self.n,
            inf: self.inf,
            factors: self.factors.iter().map(|f| f.tau(1)).collect(),
        }
    }

    /// A representative word: `Delta^inf` followed by the factor words.
    pub fn to_word(&self) -> BraidWord {
        let delta = BraidWord::delta(self.n).expect("n >= 2");
        let mut out = if self.inf >= 0 {
            delta.repeat(self.inf as usize)
        } else {
            delta.inverse().repeat((-self.inf) as usize)
        };
        for f in &self.factors {
            out = out.concat(&f.word()).expect("same strand count");
        }
        out
    }

    /// Canonical serialization used for wire formats and digests:
    /// `{"inf":k,"factors":[[...],...]}` with 1-indexed image arrays.
    pub fn canonical_json(&self) -> String {
        let mut s = String::new();
        s.push_str("{\"inf\":");
        s.push_str(&self.inf.to_string());
        s.push_str(",\"factors\":[");
        for (i, f) in self.factors.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push('[');
            for (j, v) in f.permutation().images().iter().enumerate() {
                if j > 0 {
                    s.push(',');
                }
                s.push_str(&v.to_string());
            }
            s.push(']');
        }
        s.push_str("]}");
        s
    }

    /// Text rendering `D^k | p(W1) | p(W2) | ...` with comma-separated
    /// image arrays; a braid of canonical length zero renders as `D^k |`.
    pub fn render(&self) -> String {
        if self.factors.is_empty() {
            return format!("D^{} |", self.inf);
        }
        let mut parts = vec![format!("D^{}", self.inf)];
        for f in &self.factors {
            parts.push(
                f.permutation()
                    .images()
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
            );
        }
        parts.join(" | ")
    }

    /// Reassembles a normal form from parts, rebalancing as needed.
    /// Used by deserializers and the summit machinery.
    pub fn from_parts(n: usize, inf: i64, factors: Vec<CanonicalFactor>) -> NormalForm {
        weight(n, inf, factors.into_iter().map(|f| f.permutation().clone()).collect())
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn tau_perm(p: &Permutation, k: i64, w0: &Permutation) -> Permutation {
    if k.rem_euclid(2) == 0 {
        p.clone()
    } else {
        w0.then(p).then(w0)
    }
}

/// Rebalances the row pair `(A, B) -> (A C, C^{-1} B)` with `C` the largest
/// prefix of `B` that can move left. Rows are raw image arrays of length
/// `n`; all scratch lives on the stack. Returns false when the pair is
/// already left-weighted.
fn rebalance_rows(a: &mut [u8], b: &mut [u8]) -> bool {
    use crate::permutation::{descent_mask_of, fill_inverse, MAX_STRANDS};

    let n = a.len();
    let sb = descent_mask_of(b);
    if sb == 0 {
        return false;
    }
    let mut a_inv = [0u8; MAX_STRANDS];
    fill_inverse(a, &mut a_inv);
    let fa = descent_mask_of(&a_inv[..n]);
    if sb & !fa == 0 {
        return false;
    }

    // right complement of A: x -> n - 1 - a^{-1}(x)
    let mut comp = [0u8; MAX_STRANDS];
    for x in 0..n {
        comp[x] = (n - 1) as u8 - a_inv[x];
    }
    let mut c = [0u8; MAX_STRANDS];
    let mut c_inv = [0u8; MAX_STRANDS];
    crate::factor::meet_into(&comp[..n], b, &mut c, &mut c_inv);

    let mut tmp = [0u8; MAX_STRANDS];
    for x in 0..n {
        tmp[x] = c[a[x] as usize];
    }
    a.copy_from_slice(&tmp[..n]);
    for x in 0..n {
        tmp[x] = b[c_inv[x] as usize];
    }
    b.copy_from_slice(&tmp[..n]);
    true
}

/// Core engine: makes every adjacent pair of rows left-weighted, then
/// absorbs leading `Delta`s into the infimum and drops trailing trivial
/// factors. `rows` is a flat buffer of `m` image arrays, each `n` wide.
fn weight_rows(n: usize, mut inf: i64, mut rows: Vec<u8>) -> NormalForm {
    use crate::permutation::descent_mask_of;

    let m = rows.len() / n.max(1);
    if m >= 2 {
        let mut queued = vec![true; m - 1];
        let mut pending: VecDeque<usize> = (0..m - 1).collect();
        while let Some(i) = pending.pop_front() {
            queued[i] = false;
            let (left, right) = rows.split_at_mut((i + 1) * n);
            let a = &mut left[i * n..];
            let b = &mut right[..n];
            if rebalance_rows(a, b) {
                // the fixed pair is now weighted; both neighbors changed
                if i > 0 && !queued[i - 1] {
                    queued[i - 1] = true;
                    pending.push_back(i - 1);
                }
                if i + 1 < m - 1 && !queued[i + 1] {
                    queued[i + 1] = true;
                    pending.push_back(i + 1);
                }
            }
        }
    }

    // at the fixpoint, Deltas sit at the front and trivial factors at the back
    let is_delta_row = |row: &[u8]| row.iter().enumerate().all(|(x, &v)| v as usize == n - 1 - x);
    let is_eps_row = |row: &[u8]| row.iter().enumerate().all(|(x, &v)| v as usize == x);
    let mut start = 0;
    while start < m && is_delta_row(&rows[start * n..(start + 1) * n]) {
        start += 1;
    }
    inf += start as i64;
    let mut end = m;
    while end > start && is_eps_row(&rows[(end - 1) * n..end * n]) {
        end -= 1;
    }

    let factors: Vec<CanonicalFactor> = (start..end)
        .map(|i| {
            CanonicalFactor::from_permutation(Permutation::from_map(
                rows[i * n..(i + 1) * n].to_vec(),
            ))
        })
        .collect();

    debug_assert!(factors.iter().all(|f| !f.is_eps() && !f.is_delta()));
    debug_assert!((0..factors.len().saturating_sub(1)).all(|i| {
        descent_mask_of(factors[i + 1].permutation().as_slice())
            & !{
                let mut inv = [0u8; crate::permutation::MAX_STRANDS];
                crate::permutation::fill_inverse(factors[i].permutation().as_slice(), &mut inv);
                descent_mask_of(&inv[..n])
            }
            == 0
    }));

    NormalForm { n, inf, factors }
}

/// Convenience wrapper over [`weight_rows`] for permutation lists.
fn weight(n: usize, inf: i64, perms: Vec<Permutation>) -> NormalForm {
    let mut rows = Vec::with_capacity(perms.len() * n);
    for p in &perms {
        rows.extend_from_slice(p.as_slice());
    }
    weight_rows(n, inf, rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(n: usize, letters: &[i32]) -> NormalForm {
        normalize(&BraidWord::new(n, letters.to_vec()).unwrap())
    }

    #[test]
    fn trivial_words_normalize_to_identity() {
        assert!(nf(3, &[1, -1]).is_identity());
        assert!(nf(3, &[]).is_identity());
        assert!(nf(3, &[2, 1, -1, -2]).is_identity());
    }

    #[test]
    fn half_twist_absorbs_into_inf() {
        let a = nf(3, &[1, 2, 1, 2]);
        assert_eq!(a.inf(), 1);
        assert_eq!(a.len(), 1);
        assert_eq!(a.factors()[0].permutation().images(), vec![1, 3, 2]);
        assert_eq!(a.sup(), 2);
    }

    #[test]
    fn single_inverse_letter() {
        let a = nf(3, &[-1]);
        assert_eq!(a.inf(), -1);
        assert_eq!(a.len(), 1);
        // Delta sigma_1^{-1} = sigma_1 sigma_2
        assert_eq!(a.factors()[0].word().letters(), &[1, 2]);
    }

    #[test]
    fn two_factor_example() {
        let a = nf(3, &[1, 2, 2]);
        assert_eq!(a.inf(), 0);
        assert_eq!(a.len(), 2);
        assert_eq!(a.factors()[0].word().letters(), &[1, 2]);
        assert_eq!(a.factors()[1].word().letters(), &[2]);
    }

    #[test]
    fn braid_relations_are_invisible() {
        assert_eq!(nf(3, &[1, 2, 1]), nf(3, &[2, 1, 2]));
        assert_ne!(nf(3, &[1]), nf(3, &[2]));
        assert_eq!(nf(5, &[1, 3]), nf(5, &[3, 1]));
        assert!(nf(3, &[1, 2, 1]).equals(&nf(3, &[2, 1, 2])).unwrap());
    }

    #[test]
    fn equals_rejects_strand_mismatch() {
        let a = nf(3, &[1]);
        let b = nf(4, &[1]);
        assert!(a.equals(&b).is_err());
    }

    #[test]
    fn multiply_and_invert_are_group_operations() {
        let d = NormalForm::delta_power(3, 1);
        let d2 = d.multiply(&d).unwrap();
        assert_eq!(d2.inf(), 2);
        assert_eq!(d2.len(), 0);

        assert!(NormalForm::identity(4).invert().is_identity());

        let a = nf(4, &[1, -2, 3, 3, 1]);
        assert!(a.multiply(&a.invert()).unwrap().is_identity());
        assert!(a.invert().multiply(&a).unwrap().is_identity());
    }

    #[test]
    fn conjugation_matches_word_computation() {
        let a = nf(3, &[1]);
        let g = BraidWord::new(3, vec![2]).unwrap();
        let lhs = a.conjugate(&g).unwrap();
        let rhs = nf(3, &[-2, 1, 2]);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn delta_squared_is_central() {
        let words: [&[i32]; 4] = [&[1], &[2, -1], &[1, 2, 1, -2], &[-1, -1, 2]];
        for letters in words {
            let w = BraidWord::new(3, letters.to_vec()).unwrap();
            let d2 = NormalForm::delta_power(3, 2);
            let lhs = d2.multiply(&normalize(&w)).unwrap();
            let rhs = normalize(&w).multiply(&d2).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn exponent_sum_matches_word() {
        let w = BraidWord::new(4, vec![1, -2, 3, 3, 1, -1]).unwrap();
        assert_eq!(normalize(&w).exponent_sum(), w.exponent_sum());
    }

    #[test]
    fn to_word_round_trips() {
        let a = nf(4, &[1, -2, 3, 1, -3, 2, 2]);
        assert_eq!(normalize(&a.to_word()), a);
    }

    #[test]
    fn rendering_matches_format() {
        assert_eq!(nf(3, &[1, -1]).render(), "D^0 |");
        assert_eq!(nf(3, &[1, 2, 1, 2]).render(), "D^1 | 1,3,2");
        assert_eq!(nf(3, &[1, 2, 2]).render(), "D^0 | 3,1,2 | 1,3,2");
    }

    #[test]
    fn canonical_json_shape() {
        assert_eq!(nf(3, &[1, -1]).canonical_json(), "{\"inf\":0,\"factors\":[]}");
        assert_eq!(
            nf(3, &[1, 2, 1, 2]).canonical_json(),
            "{\"inf\":1,\"factors\":[[1,3,2]]}"
        );
    }

    #[test]
    fn tau_commutes_with_normalize() {
        let w = BraidWord::new(4, vec![1, -2, 3, 1]).unwrap();
        assert_eq!(normalize(&w.tau(1)), normalize(&w).tau(1));
        assert_eq!(normalize(&w).tau(2), normalize(&w));
    }
}
