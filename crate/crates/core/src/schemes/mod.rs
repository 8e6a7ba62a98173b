//! The five signature protocols: proxy signatures with a warrant, designated-verifier
//! signatures (single and bi-designated), and their proxy variants.
//!
//! Secrets live in the right subgroup RB_r and every ephemeral `b` in the left
//! subgroup LB_l, so `b` commutes with every secret. Verification never sees a
//! witness; it decides conjugacy with [`crate::conjugacy::is_conjugate`] and fails
//! closed when that decision is inconclusive.

mod designated;
mod keys;
mod proxy;
mod proxy_designated;
mod warrant;

use std::fmt;

pub use designated::{bidvs_sign, bidvs_sign_with, bidvs_verify, dvs_sign, dvs_sign_with, dvs_verify};
pub use designated::{BiDvsSignature, DvsSignature};
pub use keys::{keygen, KeyPair, PublicKey};
pub use proxy::{accept_delegation, delegate, delegate_with, proxy_sign, proxy_sign_with, proxy_verify};
pub use proxy::{Delegation, ProxyKey, ProxySignature};
pub use proxy_designated::{bidvps_sign, bidvps_sign_with, bidvps_verify, dvps_sign, dvps_sign_with, dvps_verify};
pub use proxy_designated::{BiDvpsSignature, DvpsSignature};
pub use warrant::Warrant;

use crate::braid::{BraidError, GroupParams, NormalForm};
use crate::conjugacy::{is_conjugate, ConjugacyCaps, Verdict, WorkCounters};
use crate::hashing::HashParams;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SchemeError {
    #[error("delegation check t_o·x'_o ~ z_o·x_o failed")]
    DelegationCheckFailed,
    #[error("conjugacy decision hit its cap")]
    ConjugacyInconclusive,
    #[error("invalid warrant: {0}")]
    InvalidWarrant(&'static str),
    #[error("group parameters do not match")]
    ParamsMismatch,
    #[error(transparent)]
    Braid(#[from] BraidError),
}

/// Everything a party needs to run the protocols at one parameter set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SchemeParams {
    pub group: GroupParams,
    /// Letters in sampled public braids, secrets and `z_o`.
    pub key_length: usize,
    /// Letters in each ephemeral `b`.
    pub ephemeral_length: usize,
    pub hash: HashParams,
    pub caps: ConjugacyCaps,
    /// Sample `z_o` from LB_l as literally written, instead of from the full group.
    pub faithful: bool,
}

impl SchemeParams {
    pub fn new(group: GroupParams, key_length: usize, ephemeral_length: usize, h1_length: usize) -> Self {
        SchemeParams {
            group,
            key_length,
            ephemeral_length,
            hash: HashParams::new(group, h1_length),
            caps: ConjugacyCaps::default(),
            faithful: false,
        }
    }
}

/// Which of the two designated verifiers a bi-designated signature is addressed to.
/// The challenge always hashes `β_1·β_2` in that order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Recipient {
    First,
    Second,
}

impl Recipient {
    pub fn to_byte(self) -> u8 {
        match self {
            Recipient::First => 1,
            Recipient::Second => 2,
        }
    }

    pub fn from_byte(b: u8) -> Option<Self> {
        match b {
            1 => Some(Recipient::First),
            2 => Some(Recipient::Second),
            _ => None,
        }
    }
}

/// A verification relation, named the way it is printed on rejection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Check {
    BraidIndex,
    WarrantWindow,
    WarrantIdentity,
    WarrantScope,
    /// γ ~ h
    GammaH,
    /// δ ~ x_p
    DeltaXp,
    /// γδ ~ h·x_p
    GammaDeltaHXp,
    /// γθ ~ h·t_o
    GammaThetaHTo,
    /// δ ~ h
    DeltaH,
    /// δ·x'_o ~ h·x_o
    DeltaXoHXo,
}

impl Check {
    pub fn label(self) -> &'static str {
        match self {
            Check::BraidIndex => "braid-index",
            Check::WarrantWindow => "warrant-window",
            Check::WarrantIdentity => "warrant-identity",
            Check::WarrantScope => "warrant-scope",
            Check::GammaH => "γ ~ h",
            Check::DeltaXp => "δ ~ x_p",
            Check::GammaDeltaHXp => "γδ ~ h·x_p",
            Check::GammaThetaHTo => "γθ ~ h·t_o",
            Check::DeltaH => "δ ~ h",
            Check::DeltaXoHXo => "δ·x'_o ~ h·x_o",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOutcome {
    pub accepted: bool,
    /// The first relation that did not hold.
    pub failed_check: Option<Check>,
    /// The failing relation could not be decided within the conjugacy caps.
    pub inconclusive: bool,
    pub work: WorkCounters,
}

impl VerifyOutcome {
    fn accept(work: WorkCounters) -> Self {
        VerifyOutcome { accepted: true, failed_check: None, inconclusive: false, work }
    }

    fn reject(check: Check, work: WorkCounters) -> Self {
        VerifyOutcome { accepted: false, failed_check: Some(check), inconclusive: false, work }
    }
}

/// Runs conjugacy checks in order and stops at the first that does not hold.
fn run_checks(checks: &[(Check, NormalForm, NormalForm)], caps: &ConjugacyCaps) -> VerifyOutcome {
    let mut work = WorkCounters::default();
    for (check, lhs, rhs) in checks {
        let decision = match is_conjugate(lhs, rhs, caps) {
            Ok(d) => d,
            Err(_) => return VerifyOutcome::reject(Check::BraidIndex, work),
        };
        work.absorb(&decision.work);
        match decision.verdict {
            Verdict::Conjugate => {}
            Verdict::NotConjugate => return VerifyOutcome::reject(*check, work),
            Verdict::Inconclusive => {
                return VerifyOutcome { accepted: false, failed_check: Some(*check), inconclusive: true, work }
            }
        }
    }
    VerifyOutcome::accept(work)
}

/// Warrant window and identity fields, checked before any braid work.
fn check_warrant(w: &Warrant, now: u64) -> Option<Check> {
    if now < w.valid_from || now > w.valid_to {
        return Some(Check::WarrantWindow);
    }
    if w.original_id.is_empty() || w.proxy_id.is_empty() {
        return Some(Check::WarrantIdentity);
    }
    None
}

fn same_index(n: usize, elements: &[&NormalForm]) -> bool {
    elements.iter().all(|e| e.n() == n)
}
