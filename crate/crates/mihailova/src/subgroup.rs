//! The subgroups `G_i = <sigma_i^2, sigma_{i+1}^2, sigma_{i+3}^2, sigma_{i+4}^2>`
//! of `B_n` (n >= 6, 1 <= i <= n-5), each isomorphic to `F_2 x F_2`, and the
//! isomorphism carrying free pairs onto them:
//!
//! `(u, 1) -> sigma_i^2`, `(t, 1) -> sigma_{i+1}^2`,
//! `(1, u) -> sigma_{i+3}^2`, `(1, t) -> sigma_{i+4}^2`.
//!
//! The index gap of at least two between `{i, i+1}` and `{i+3, i+4}` makes
//! the two halves commute, so the pair components can be expanded
//! independently and concatenated.

use braid_core::BraidWord;

use crate::error::MihailovaError;
use crate::free::{FreeGen, FreePairWord, FreeWord};
use crate::relators::RelatorSet;

/// Validates `n >= 6` and `1 <= i <= n - 5`.
pub fn check_indices(n: usize, i: usize) -> Result<(), MihailovaError> {
    if n < 6 {
        return Err(MihailovaError::StrandCountTooSmall(n));
    }
    if i < 1 || i > n - 5 {
        return Err(MihailovaError::SubgroupIndexOutOfRange { i, n, max: n - 5 });
    }
    Ok(())
}

/// The four squared-generator words of `G_i`, in order.
pub fn gi_generators(n: usize, i: usize) -> Result<Vec<BraidWord>, MihailovaError> {
    check_indices(n, i)?;
    [i, i + 1, i + 3, i + 4]
        .into_iter()
        .map(|a| {
            let a = a as i32;
            BraidWord::new(n, vec![a, a]).map_err(Into::into)
        })
        .collect()
}

/// Generator index supports of `G_i`, used by the session overlap test.
pub fn gi_support(i: usize) -> [usize; 4] {
    [i, i + 1, i + 3, i + 4]
}

fn expand_component(n: usize, word: &FreeWord, u_index: usize, t_index: usize) -> BraidWord {
    let mut out = BraidWord::empty(n);
    for &(g, s) in word.letters() {
        let idx = match g {
            FreeGen::U => u_index,
            FreeGen::T => t_index,
        } as i32;
        let letter = if s > 0 { idx } else { -idx };
        out.push(letter).expect("index in range by construction");
        out.push(letter).expect("index in range by construction");
    }
    out
}

/// Image of a free pair under the isomorphism onto `G_i`.
pub fn phi(n: usize, i: usize, w: &FreePairWord) -> Result<BraidWord, MihailovaError> {
    check_indices(n, i)?;
    let left = expand_component(n, &w.left, i, i + 1);
    let right = expand_component(n, &w.right, i + 3, i + 4);
    Ok(left.concat(&right)?)
}

/// The Mihailova generator list for `M(G_i)`: the images of the diagonal
/// pair generators `(u, u)` and `(t, t)`, then `(1, S_j)` for each relator
/// word, in order.
pub fn mihailova_generators(
    n: usize,
    i: usize,
    relators: &RelatorSet,
) -> Result<Vec<BraidWord>, MihailovaError> {
    check_indices(n, i)?;
    let u = FreeWord::new(vec![(FreeGen::U, 1)]);
    let t = FreeWord::new(vec![(FreeGen::T, 1)]);
    let mut out = vec![
        phi(n, i, &FreePairWord::diagonal(u))?,
        phi(n, i, &FreePairWord::diagonal(t))?,
    ];
    for s in &relators.s_words {
        out.push(phi(n, i, &FreePairWord::new(FreeWord::empty(), s.clone()))?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gi_generator_examples() {
        let gens = gi_generators(6, 1).unwrap();
        let letters: Vec<Vec<i32>> = gens.iter().map(|w| w.letters().to_vec()).collect();
        assert_eq!(letters, vec![vec![1, 1], vec![2, 2], vec![4, 4], vec![5, 5]]);

        let gens = gi_generators(8, 2).unwrap();
        let letters: Vec<Vec<i32>> = gens.iter().map(|w| w.letters().to_vec()).collect();
        assert_eq!(letters, vec![vec![2, 2], vec![3, 3], vec![5, 5], vec![6, 6]]);

        assert!(gi_generators(6, 2).is_err());
        assert!(gi_generators(5, 1).is_err());
    }

    #[test]
    fn phi_examples() {
        let u = FreeWord::parse("u").unwrap();
        let w = phi(6, 1, &FreePairWord::new(u.clone(), FreeWord::empty())).unwrap();
        assert_eq!(w.letters(), &[1, 1]);

        let w = phi(6, 1, &FreePairWord::new(u.clone(), u.clone())).unwrap();
        assert_eq!(w.letters(), &[1, 1, 4, 4]);

        let w = phi(6, 1, &FreePairWord::default()).unwrap();
        assert!(w.is_empty());

        // inverse letters expand to inverse squares
        let uinv = FreeWord::parse("U").unwrap();
        let w = phi(6, 1, &FreePairWord::new(uinv, FreeWord::empty())).unwrap();
        assert_eq!(w.letters(), &[-1, -1]);
    }

    #[test]
    fn mihailova_generator_examples() {
        let gens = mihailova_generators(6, 1, &RelatorSet::diagonal_only()).unwrap();
        let letters: Vec<Vec<i32>> = gens.iter().map(|w| w.letters().to_vec()).collect();
        assert_eq!(letters, vec![vec![1, 1, 4, 4], vec![2, 2, 5, 5]]);

        let gens = mihailova_generators(8, 2, &RelatorSet::diagonal_only()).unwrap();
        let letters: Vec<Vec<i32>> = gens.iter().map(|w| w.letters().to_vec()).collect();
        assert_eq!(letters, vec![vec![2, 2, 5, 5], vec![3, 3, 6, 6]]);

        let r = RelatorSet::from_words("test", vec![FreeWord::parse("tu").unwrap()]);
        let gens = mihailova_generators(6, 1, &r).unwrap();
        assert_eq!(gens.len(), 3);
        // (1, tu) expands on the right half only: sigma_5^2 sigma_4^2
        assert_eq!(gens[2].letters(), &[5, 5, 4, 4]);
    }

    #[test]
    fn halves_commute_under_normalize() {
        use braid_core::normalize;
        let a = FreeWord::parse("utU").unwrap();
        let b = FreeWord::parse("tU").unwrap();
        let left = phi(8, 2, &FreePairWord::new(a, FreeWord::empty())).unwrap();
        let right = phi(8, 2, &FreePairWord::new(FreeWord::empty(), b)).unwrap();
        let lr = normalize(&left.concat(&right).unwrap());
        let rl = normalize(&right.concat(&left).unwrap());
        assert_eq!(lr, rl);
    }
}
