//! Cryptanalysis harness for the braid key exchange.
//!
//! Implements the two classic conjugacy-search attacks against recorded
//! commitment messages: greedy length-based descent and super-summit-set
//! search. A recovered conjugator is graded by whether it derives the
//! session key, not by whether it equals the private key; any candidate
//! off by a central factor is functionally equivalent and counts as a
//! break. All runs are deterministic under fixed seeds and budgets.

pub mod bench;
pub mod instance;
pub mod length_based;
pub mod recovery;
pub mod report;
pub mod sss_search;

pub use bench::{attack_benchmark, BenchConfig, BenchReport, CSV_HEADER};
pub use instance::AttackInstance;
pub use length_based::length_based_attack;
pub use recovery::{attacker_key_recovery, attacker_key_recovery_digest, RecoveryOutcome};
pub use report::{residual_is_central, AttackError, AttackMethod, AttackReport};
pub use sss_search::{sss_attack, sss_conjugator_search};
