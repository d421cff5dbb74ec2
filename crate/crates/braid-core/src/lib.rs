//! Exact arithmetic in the Artin braid groups `B_n`.
//!
//! The crate provides braid words over signed Artin generators, canonical
//! factors (permutation braids), the unique left-weighted normal form
//! `Delta^k W_1 ... W_s` with its group operations, and the conjugacy
//! machinery built on it: cycling, decycling, and super summit sets with
//! conjugator witnesses.
//!
//! All values are immutable after construction and all operations are pure
//! functions, so everything is `Send + Sync` and safe to share across
//! threads.
//!
//! Conventions:
//! - generator indices are 1-based: letter `i` is `sigma_i`, `-i` its inverse;
//! - permutations are image arrays with 1-indexed semantics at the API and
//!   serialization level;
//! - `u <= v` means `u` divides `v` (`v = alpha u beta` with positive
//!   cofactors), so canonical factors are exactly the `F` with
//!   `eps <= F <= Delta`.
//!
//! ```
//! use braid_core::{normalize, BraidWord};
//!
//! // the two sides of the braid relation are the same element
//! let a = normalize(&BraidWord::parse(3, "1 2 1").unwrap());
//! let b = normalize(&BraidWord::parse(3, "2 1 2").unwrap());
//! assert!(a.equals(&b).unwrap());
//! assert_eq!(a.render(), "D^1 |");
//! ```

pub mod error;
pub mod factor;
pub mod normal;
pub mod oracle;
pub mod permutation;
pub mod summit;
pub mod word;

pub use error::BraidError;
pub use factor::CanonicalFactor;
pub use normal::{normalize, NormalForm};
pub use permutation::Permutation;
pub use summit::{cycling, decycling, super_summit_set, SummitSetResult, DEFAULT_SSS_CAP};
pub use word::BraidWord;
