//! Attack methods and result reports.

use std::str::FromStr;
use std::time::Duration;

use braid_core::{BraidWord, NormalForm};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AttackError {
    #[error("unknown attack method {0:?}; supported: length, sss")]
    UnknownMethod(String),

    #[error(transparent)]
    Braid(#[from] braid_core::BraidError),

    #[error(transparent)]
    Protocol(#[from] aag_protocol::ProtocolError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AttackMethod {
    LengthBased,
    SuperSummit,
}

impl AttackMethod {
    pub fn name(&self) -> &'static str {
        match self {
            AttackMethod::LengthBased => "length",
            AttackMethod::SuperSummit => "sss",
        }
    }
}

impl FromStr for AttackMethod {
    type Err = AttackError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "length" => Ok(AttackMethod::LengthBased),
            "sss" => Ok(AttackMethod::SuperSummit),
            other => Err(AttackError::UnknownMethod(other.to_string())),
        }
    }
}

impl std::fmt::Display for AttackMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of one attack run.
///
/// A report with `success = true` always carries a candidate that has
/// been re-verified against every pair of its instance. When the
/// instance had a planted conjugator, `residual` is the normal form of
/// `candidate * planted^{-1}`; a central residual (`Delta^{2m}`) means
/// the attack found a functionally equivalent key.
#[derive(Debug, Clone)]
pub struct AttackReport {
    pub method: AttackMethod,
    pub success: bool,
    pub candidate: Option<BraidWord>,
    pub iterations: u64,
    pub key_match: Option<bool>,
    pub elapsed: Duration,
    pub residual: Option<NormalForm>,
    pub detail: String,
}

impl AttackReport {
    pub fn new(method: AttackMethod) -> Self {
        AttackReport {
            method,
            success: false,
            candidate: None,
            iterations: 0,
            key_match: None,
            elapsed: Duration::ZERO,
            residual: None,
            detail: String::new(),
        }
    }
}

/// True iff a residual lies in the center: a pure even power of `Delta`.
pub fn residual_is_central(residual: &NormalForm) -> bool {
    residual.len() == 0 && residual.inf() % 2 == 0
}
