//! Empirical freeness probe for the rank-2 subgroups
//! `<sigma_i^2, sigma_{i+1}^2>`.
//!
//! These subgroups are free of rank 2, so no nonempty freely reduced word
//! over the two squared generators collapses to the identity. The probe
//! samples such words and counts normalize-to-identity violations; it
//! validates the arithmetic engine rather than proving the theorem.

use braid_core::{normalize, BraidWord};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::MihailovaError;
use crate::free::{FreeGen, FreeWord};
use crate::subgroup::check_indices;

/// Outcome of a freeness probe run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreenessReport {
    pub n: usize,
    pub i: usize,
    pub trials: usize,
    pub max_len: usize,
    /// Words (over `{u, t}`, mapped onto the squared generators) that
    /// normalized to the identity. Empty on a sound engine.
    pub violations: Vec<String>,
}

impl FreenessReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Expands a free word over `{u, t}` by `u -> sigma_i^2`, `t -> sigma_{i+1}^2`.
pub fn expand_pair_generators(n: usize, i: usize, w: &FreeWord) -> BraidWord {
    let mut out = BraidWord::empty(n);
    for &(g, s) in w.letters() {
        let idx = match g {
            FreeGen::U => i,
            FreeGen::T => i + 1,
        } as i32;
        let letter = if s > 0 { idx } else { -idx };
        out.push(letter).expect("index in range");
        out.push(letter).expect("index in range");
    }
    out
}

/// Samples `trials` nonempty freely reduced words of length up to
/// `max_len` over `{sigma_i^2, sigma_{i+1}^2}` and reports any that
/// normalize to the identity.
pub fn freeness_probe(
    n: usize,
    i: usize,
    trials: usize,
    max_len: usize,
    seed: u64,
) -> Result<FreenessReport, MihailovaError> {
    check_indices(n, i)?;
    let max_len = max_len.max(1);
    let mut rng = StdRng::seed_from_u64(seed);
    let mut violations = Vec::new();
    for _ in 0..trials {
        let len = rng.gen_range(1..=max_len);
        let mut letters: Vec<(FreeGen, i8)> = Vec::with_capacity(len);
        while letters.len() < len {
            let g = if rng.gen_bool(0.5) { FreeGen::U } else { FreeGen::T };
            let s: i8 = if rng.gen_bool(0.5) { 1 } else { -1 };
            if let Some(&(pg, ps)) = letters.last() {
                if pg == g && ps == -s {
                    continue;
                }
            }
            letters.push((g, s));
        }
        let word = FreeWord::new(letters);
        let braid = expand_pair_generators(n, i, &word);
        if normalize(&braid).is_identity() {
            violations.push(word.render());
        }
    }
    Ok(FreenessReport {
        n,
        i,
        trials,
        max_len,
        violations,
    })
}
