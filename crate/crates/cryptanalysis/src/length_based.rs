//! The length-based attack: greedy simultaneous-conjugacy descent.
//!
//! Starting from the conjugated side of every pair, repeatedly conjugate
//! all pairs by the single Artin letter that most reduces the total
//! complexity, measured as the pair `(sum of canonical lengths, sum of
//! word lengths)` compared lexicographically. Ties go to the smallest
//! generator index, positive sign first, which makes runs reproducible.
//! The walk stops at success, at a local minimum, or when the iteration
//! budget runs out.

use std::time::Instant;

use braid_core::{BraidWord, CanonicalFactor, NormalForm};

use crate::instance::AttackInstance;
use crate::report::{AttackMethod, AttackReport};

type Complexity = (u64, u64);

fn complexity(states: &[NormalForm]) -> Complexity {
    let mut canonical = 0u64;
    let mut letters = 0u64;
    for s in states {
        canonical += s.len() as u64;
        letters += s.word_length() as u64;
    }
    (canonical, letters)
}

/// Runs the greedy descent with at most `budget` rounds.
pub fn length_based_attack(inst: &AttackInstance, budget: u64) -> AttackReport {
    let start = Instant::now();
    let n = inst.n;
    let mut report = AttackReport::new(AttackMethod::LengthBased);

    // moves sigma_1, sigma_1^{-1}, sigma_2, ... as (letter, nf, nf_inv)
    let moves: Vec<(i32, NormalForm, NormalForm)> = (1..n as i32)
        .flat_map(|j| [j, -j])
        .map(|l| {
            let f = NormalForm::from_factor(
                CanonicalFactor::generator(n, l.unsigned_abs() as usize).expect("index in range"),
            );
            let (nf, inv) = if l > 0 {
                (f.clone(), f.invert())
            } else {
                (f.invert(), f.clone())
            };
            (l, nf, inv)
        })
        .collect();

    let bases: Vec<&NormalForm> = inst.pairs.iter().map(|(b, _)| b).collect();
    let mut states: Vec<NormalForm> = inst.pairs.iter().map(|(_, c)| c.clone()).collect();
    let mut walk = BraidWord::empty(n);
    let mut current = complexity(&states);

    loop {
        if states.iter().zip(&bases).all(|(s, b)| s == *b) {
            let candidate = walk.inverse();
            report.success = inst.verify_candidate(&candidate);
            if report.success {
                report.residual = inst.residual(&candidate);
                report.candidate = Some(candidate);
            } else {
                report.detail = "descent converged but candidate failed verification".to_string();
            }
            break;
        }
        if report.iterations >= budget {
            report.detail = "budget exhausted".to_string();
            break;
        }
        report.iterations += 1;

        let mut best: Option<(i32, Vec<NormalForm>, Complexity)> = None;
        for (letter, nf, inv) in &moves {
            let next: Vec<NormalForm> = states
                .iter()
                .map(|s| inv.multiply(s).and_then(|t| t.multiply(nf)).expect("same strand count"))
                .collect();
            let c = complexity(&next);
            if c < current && best.as_ref().is_none_or(|(_, _, bc)| c < *bc) {
                best = Some((*letter, next, c));
            }
        }
        match best {
            Some((letter, next, c)) => {
                states = next;
                current = c;
                walk.push(letter).expect("letter in range");
            }
            None => {
                report.detail = "local minimum".to_string();
                break;
            }
        }
    }

    report.elapsed = start.elapsed();
    report
}
