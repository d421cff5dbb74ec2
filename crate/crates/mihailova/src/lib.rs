//! Mihailova subgroups of braid groups.
//!
//! For `n >= 6` the braid group `B_n` contains subgroups
//! `G_i = <sigma_i^2, sigma_{i+1}^2, sigma_{i+3}^2, sigma_{i+4}^2>`
//! isomorphic to `F_2 x F_2`. This crate builds those subgroups, the
//! isomorphism from free pairs, the generator lists of the associated
//! Mihailova subgroups `M(G_i)`, and private keys sampled from them.
//!
//! The non-diagonal generators depend on externally supplied relator
//! words; without a relator file the crate runs in diagonal-only mode,
//! whose two generators are subgroup members by definition.

pub mod error;
pub mod free;
pub mod key;
pub mod probe;
pub mod relators;
pub mod subgroup;

pub use error::MihailovaError;
pub use free::{FreeGen, FreePairWord, FreeWord};
pub use key::{
    decode_key, diagonal_components, encode_key, load_key, sample_key, save_key, PrivateKey,
};
pub use probe::{expand_pair_generators, freeness_probe, FreenessReport};
pub use relators::RelatorSet;
pub use subgroup::{check_indices, gi_generators, gi_support, mihailova_generators, phi};

/// Default session parameters used by the command-line tools.
pub mod defaults {
    pub const N: usize = 8;
    pub const ALICE_INDEX: usize = 1;
    pub const BOB_INDEX: usize = 2;
    pub const KEY_LENGTH: usize = 16;
    pub const SEED: u64 = 42;
}
