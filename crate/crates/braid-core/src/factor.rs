//! Canonical factors (permutation braids): positive braids between the
//! identity and the fundamental braid `Delta`, in bijection with the
//! permutations of `{1, ..., n}`.

use crate::error::BraidError;
use crate::permutation::Permutation;
use crate::word::BraidWord;

/// A permutation braid, stored as its strand permutation.
///
/// Divisibility facts used throughout:
/// - `sigma_i` left-divides `F` iff `p(i) > p(i+1)`;
/// - `sigma_i` right-divides `F` iff `p^{-1}(i) > p^{-1}(i+1)`;
/// - `F` left-divides `G` iff every strand pair crossing in `F` also
///   crosses in `G` (inversion-set containment).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalFactor {
    perm: Permutation,
}

impl CanonicalFactor {
    pub fn eps(n: usize) -> Self {
        CanonicalFactor {
            perm: Permutation::identity(n),
        }
    }

    pub fn delta(n: usize) -> Self {
        CanonicalFactor {
            perm: Permutation::reversal(n),
        }
    }

    /// The generator `sigma_i` as a factor (`1 <= i < n`).
    pub fn generator(n: usize, i: usize) -> Result<Self, BraidError> {
        if i < 1 || i >= n {
            return Err(BraidError::GeneratorOutOfRange {
                index: i as i64,
                max: n.saturating_sub(1),
            });
        }
        Ok(CanonicalFactor {
            perm: Permutation::transposition(n, i),
        })
    }

    /// The unique canonical factor projecting to `p`.
    pub fn from_permutation(p: Permutation) -> Self {
        CanonicalFactor { perm: p }
    }

    pub fn permutation(&self) -> &Permutation {
        &self.perm
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    pub fn is_eps(&self) -> bool {
        self.perm.is_identity()
    }

    pub fn is_delta(&self) -> bool {
        self.perm == Permutation::reversal(self.n())
    }

    /// Letter count of the positive word representing this factor.
    pub fn weight(&self) -> usize {
        self.perm.inversions()
    }

    /// Generators that left-divide this factor, ascending.
    pub fn starting_set(&self) -> Vec<usize> {
        mask_to_indices(self.perm.descent_mask())
    }

    /// Generators that right-divide this factor, ascending.
    pub fn finishing_set(&self) -> Vec<usize> {
        mask_to_indices(self.perm.inverse_descent_mask())
    }

    /// The positive word obtained by repeatedly peeling the smallest
    /// left-dividing generator; its length equals `weight()`.
    pub fn word(&self) -> BraidWord {
        let mut q = self.perm.clone();
        let mut letters = Vec::with_capacity(self.weight());
        loop {
            let mask = q.descent_mask();
            if mask == 0 {
                break;
            }
            let i = mask.trailing_zeros() as usize;
            letters.push(i as i32 + 1);
            q.swap_positions(i);
        }
        BraidWord::new(self.n(), letters).expect("peeled letters are in range")
    }

    /// Greatest common left-divisor, by greedily extracting common
    /// left-dividing generators.
    pub fn meet(&self, other: &CanonicalFactor) -> Result<CanonicalFactor, BraidError> {
        if self.n() != other.n() {
            return Err(BraidError::StrandMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(CanonicalFactor {
            perm: meet_perms(&self.perm, &other.perm),
        })
    }

    /// True iff `self` left-divides `other`.
    pub fn left_divides(&self, other: &CanonicalFactor) -> Result<bool, BraidError> {
        Ok(self.meet(other)?.perm == self.perm)
    }

    /// The factor `C` with `self * C = Delta`.
    pub fn right_complement(&self) -> CanonicalFactor {
        CanonicalFactor {
            perm: right_complement_perm(&self.perm),
        }
    }

    /// The factor `C` with `C * self = Delta`.
    pub fn left_complement(&self) -> CanonicalFactor {
        let n = self.n();
        CanonicalFactor {
            perm: Permutation::reversal(n).then(&self.perm.inverse()),
        }
    }

    /// Conjugation by `Delta^k`; only the parity of `k` matters.
    pub fn tau(&self, k: i64) -> CanonicalFactor {
        if k.rem_euclid(2) == 0 {
            return self.clone();
        }
        let w0 = Permutation::reversal(self.n());
        CanonicalFactor {
            perm: w0.then(&self.perm).then(&w0),
        }
    }
}

fn mask_to_indices(mask: u64) -> Vec<usize> {
    (0..64)
        .filter(|i| mask & (1 << i) != 0)
        .map(|i| i + 1)
        .collect()
}

/// `p^{-1}` followed by the reversal: the permutation of `F^{-1} Delta`.
pub(crate) fn right_complement_perm(p: &Permutation) -> Permutation {
    let n = p.n();
    p.inverse().then(&Permutation::reversal(n))
}

pub(crate) fn meet_perms(a: &Permutation, b: &Permutation) -> Permutation {
    let n = a.n();
    let mut c = [0u8; crate::permutation::MAX_STRANDS];
    let mut cinv = [0u8; crate::permutation::MAX_STRANDS];
    meet_into(a.as_slice(), b.as_slice(), &mut c, &mut cinv);
    Permutation::from_map(c[..n].to_vec())
}

/// Greedy gcd on raw image slices: repeatedly extracts the smallest
/// common left-dividing generator. Writes the meet and its inverse into
/// the provided scratch arrays (indices `0..n`). Descent masks are
/// maintained incrementally: a swap at position `i` only disturbs the
/// descents at `i-1`, `i`, `i+1`.
pub(crate) fn meet_into(
    a: &[u8],
    b: &[u8],
    c: &mut [u8; crate::permutation::MAX_STRANDS],
    cinv: &mut [u8; crate::permutation::MAX_STRANDS],
) {
    use crate::permutation::descent_mask_of;
    let n = a.len();
    let mut ra = [0u8; crate::permutation::MAX_STRANDS];
    let mut rb = [0u8; crate::permutation::MAX_STRANDS];
    ra[..n].copy_from_slice(a);
    rb[..n].copy_from_slice(b);
    for x in 0..n {
        c[x] = x as u8;
        cinv[x] = x as u8;
    }
    let mut mask_a = descent_mask_of(&ra[..n]);
    let mut mask_b = descent_mask_of(&rb[..n]);
    loop {
        let common = mask_a & mask_b;
        if common == 0 {
            return;
        }
        let i = common.trailing_zeros() as usize;
        ra.swap(i, i + 1);
        rb.swap(i, i + 1);
        let lo = i.saturating_sub(1);
        let hi = (i + 1).min(n - 2);
        for pos in lo..=hi {
            let bit = 1u64 << pos;
            if ra[pos] > ra[pos + 1] {
                mask_a |= bit;
            } else {
                mask_a &= !bit;
            }
            if rb[pos] > rb[pos + 1] {
                mask_b |= bit;
            } else {
                mask_b &= !bit;
            }
        }
        // c <- c * t_i, maintaining the inverse for O(1) value swaps
        let pa = cinv[i] as usize;
        let pb = cinv[i + 1] as usize;
        c.swap(pa, pb);
        cinv.swap(i, i + 1);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factor_of_word(n: usize, letters: &[i32]) -> CanonicalFactor {
        CanonicalFactor::from_permutation(BraidWord::new(n, letters.to_vec()).unwrap().permutation())
    }

    #[test]
    fn bijection_round_trip() {
        let p = Permutation::from_images(&[3, 1, 2]).unwrap();
        let f = CanonicalFactor::from_permutation(p.clone());
        assert_eq!(f.permutation(), &p);
        assert_eq!(f.word().permutation(), p);
    }

    #[test]
    fn eps_and_delta_endpoints() {
        assert!(CanonicalFactor::eps(4).is_eps());
        let d = CanonicalFactor::delta(4);
        assert!(d.is_delta());
        assert_eq!(d.weight(), 6);
        assert_eq!(d.permutation().images(), vec![4, 3, 2, 1]);
        // reversal on n=3 is Delta_3 = sigma_1 sigma_2 sigma_1
        let d3 = BraidWord::delta(3).unwrap().permutation();
        assert_eq!(CanonicalFactor::from_permutation(d3), CanonicalFactor::delta(3));
    }

    #[test]
    fn transposition_factor_is_generator() {
        let f = CanonicalFactor::generator(3, 1).unwrap();
        assert_eq!(f.permutation().images(), vec![2, 1, 3]);
        assert_eq!(f.word().letters(), &[1]);
    }

    #[test]
    fn starting_and_finishing_sets() {
        let f = factor_of_word(3, &[1, 2]);
        assert_eq!(f.starting_set(), vec![1]);
        assert_eq!(f.finishing_set(), vec![2]);

        let e = CanonicalFactor::eps(3);
        assert!(e.starting_set().is_empty());
        assert!(e.finishing_set().is_empty());

        let d = CanonicalFactor::delta(5);
        assert_eq!(d.starting_set(), vec![1, 2, 3, 4]);
        assert_eq!(d.finishing_set(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn meet_basic_identities() {
        let f = factor_of_word(3, &[1, 2]);
        let e = CanonicalFactor::eps(3);
        assert_eq!(f.meet(&f).unwrap(), f);
        assert_eq!(f.meet(&e).unwrap(), e);

        let s1 = CanonicalFactor::generator(3, 1).unwrap();
        assert_eq!(f.meet(&s1).unwrap(), s1);

        let other_n = CanonicalFactor::eps(4);
        assert!(f.meet(&other_n).is_err());
    }

    #[test]
    fn complements_multiply_to_delta() {
        for letters in [vec![1], vec![2], vec![1, 2], vec![2, 1]] {
            let f = factor_of_word(3, &letters);
            let rc = f.right_complement();
            let prod = f.permutation().then(rc.permutation());
            assert_eq!(prod, Permutation::reversal(3));
            let lc = f.left_complement();
            let prod = lc.permutation().then(f.permutation());
            assert_eq!(prod, Permutation::reversal(3));
        }
    }

    #[test]
    fn tau_fixes_delta_and_flips_generators() {
        let d = CanonicalFactor::delta(4);
        assert_eq!(d.tau(1), d);
        let s1 = CanonicalFactor::generator(4, 1).unwrap();
        let s3 = CanonicalFactor::generator(4, 3).unwrap();
        assert_eq!(s1.tau(1), s3);
        assert_eq!(s1.tau(2), s1);
    }
}
