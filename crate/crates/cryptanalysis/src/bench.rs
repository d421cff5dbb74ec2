//! Reproducible attack benchmarks with CSV output.
//!
//! Each cell plants random conjugators as session keys, runs the chosen
//! attacks on the resulting commitment messages, and records how often
//! the attack recovers a functional key. "Broken" means the recovered
//! candidate reproduces the victim's message and derives the true shared
//! key; conjugator identity is not required.

use aag_protocol::{commit_word, derive_key_initiator_raw, Role};
use braid_core::BraidWord;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::instance::AttackInstance;
use crate::length_based::length_based_attack;
use crate::recovery::attacker_key_recovery;
use crate::report::{AttackError, AttackMethod};
use crate::sss_search::sss_attack;

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub n: usize,
    pub key_lens: Vec<usize>,
    pub trials: usize,
    pub methods: Vec<AttackMethod>,
    pub seed: u64,
    pub budget: u64,
    pub sss_cap: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            n: 6,
            key_lens: vec![1, 2, 3, 4],
            trials: 50,
            methods: vec![AttackMethod::LengthBased],
            seed: 42,
            budget: 10_000,
            sss_cap: braid_core::DEFAULT_SSS_CAP,
        }
    }
}

/// One row of the benchmark table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchCell {
    pub method: AttackMethod,
    pub n: usize,
    pub key_len: usize,
    pub trials: usize,
    pub successes: usize,
    pub key_matches: usize,
    pub total_iterations: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchReport {
    pub seed: u64,
    pub cells: Vec<BenchCell>,
}

pub const CSV_HEADER: &str = "method,n,key_len,trials,successes,key_matches,mean_iterations,seed";

impl BenchReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for c in &self.cells {
            let mean = if c.trials == 0 {
                0.0
            } else {
                c.total_iterations as f64 / c.trials as f64
            };
            out.push_str(&format!(
                "{},{},{},{},{},{},{:.2},{}\n",
                c.method, c.n, c.key_len, c.trials, c.successes, c.key_matches, mean, self.seed
            ));
        }
        out
    }
}

fn random_reduced_word(n: usize, len: usize, rng: &mut ChaCha8Rng) -> BraidWord {
    let mut letters: Vec<i32> = Vec::with_capacity(len);
    while letters.len() < len {
        let i = rng.gen_range(1..n as i32);
        let l = if rng.gen_bool(0.5) { i } else { -i };
        if letters.last() == Some(&-l) {
            continue;
        }
        letters.push(l);
    }
    BraidWord::new(n, letters).expect("letters in range")
}

/// Runs every `(method, key_len)` cell for `trials` planted sessions.
/// Deterministic for a fixed seed, down to the CSV bytes.
pub fn attack_benchmark(cfg: &BenchConfig) -> Result<BenchReport, AttackError> {
    assert!(cfg.trials >= 1, "at least one trial per cell");
    let mut cells = Vec::new();
    for &method in &cfg.methods {
        for &key_len in &cfg.key_lens {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (key_len as u64).rotate_left(17));
            let mut cell = BenchCell {
                method,
                n: cfg.n,
                key_len,
                trials: cfg.trials,
                successes: 0,
                key_matches: 0,
                total_iterations: 0,
            };
            for _ in 0..cfg.trials {
                let x = random_reduced_word(cfg.n, key_len, &mut rng);
                let y = random_reduced_word(cfg.n, key_len, &mut rng);
                let msg_a = commit_word(cfg.n, &x, Role::A)?;
                let msg_b = commit_word(cfg.n, &y, Role::B)?;
                let k_true = derive_key_initiator_raw(&x, &msg_b)?;

                let mut inst = AttackInstance::from_message(&msg_a)?;
                inst.planted = Some(x.clone());

                let report = match method {
                    AttackMethod::LengthBased => length_based_attack(&inst, cfg.budget),
                    AttackMethod::SuperSummit => sss_attack(&inst, cfg.sss_cap),
                };
                cell.total_iterations += report.iterations;
                if report.success {
                    let candidate = report.candidate.expect("success carries candidate");
                    debug_assert!(inst.verify_candidate(&candidate));
                    cell.successes += 1;
                    let out = attacker_key_recovery(&candidate, &msg_a, &msg_b, &k_true)?;
                    if out.key_match == Some(true) {
                        cell.key_matches += 1;
                    }
                }
            }
            cells.push(cell);
        }
    }
    Ok(BenchReport {
        seed: cfg.seed,
        cells,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_csv() {
        let cfg = BenchConfig {
            key_lens: vec![1, 2],
            trials: 5,
            ..BenchConfig::default()
        };
        let a = attack_benchmark(&cfg).unwrap().to_csv();
        let b = attack_benchmark(&cfg).unwrap().to_csv();
        assert_eq!(a, b);
        assert!(a.starts_with(CSV_HEADER));
    }

    #[test]
    fn short_plants_break() {
        let cfg = BenchConfig {
            key_lens: vec![1],
            trials: 5,
            ..BenchConfig::default()
        };
        let r = attack_benchmark(&cfg).unwrap();
        assert!(r.cells[0].successes > 0);
        assert_eq!(r.cells[0].successes, r.cells[0].key_matches);
    }

    #[test]
    fn zero_length_plant_is_the_trivial_row() {
        // key_len 0 plants the empty conjugator: one row, full success
        let cfg = BenchConfig {
            key_lens: vec![0],
            trials: 1,
            ..BenchConfig::default()
        };
        let r = attack_benchmark(&cfg).unwrap();
        assert_eq!(r.cells.len(), 1);
        assert_eq!(r.cells[0].successes, 1);
        assert_eq!(r.cells[0].key_matches, 1);
        assert_eq!(r.cells[0].total_iterations, 0);
    }
}
