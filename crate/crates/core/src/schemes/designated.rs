//! Designated-verifier signatures, for one verifier and for two.
//!
//! The signer hides `β = b·x'_c·b⁻¹` behind `α = b·x_c·b⁻¹`. Only the verifier can
//! recover `β = a_c·α·a_c⁻¹`, because `a_c` commutes with `b`.

use rand::Rng;

use super::{run_checks, same_index, Check, KeyPair, PublicKey, Recipient, SchemeError, SchemeParams};
use super::VerifyOutcome;
use crate::braid::{random_reduced_braid, BraidError, BraidWord, NormalForm, Subgroup};
use crate::conjugacy::WorkCounters;
use crate::hashing::challenge;

/// `(m, α, δ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DvsSignature {
    pub message: Vec<u8>,
    pub alpha: NormalForm,
    pub delta: NormalForm,
}

/// `(m, α_own, β_other, δ)`: the first recipient receives `(m, α_1, β_2, δ)`, the
/// second `(m, α_2, β_1, δ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiDvsSignature {
    pub recipient: Recipient,
    pub message: Vec<u8>,
    pub alpha_own: NormalForm,
    pub beta_other: NormalForm,
    pub delta: NormalForm,
}

pub(super) fn ephemeral<R: Rng + ?Sized>(sp: &SchemeParams, rng: &mut R) -> Result<BraidWord, SchemeError> {
    Ok(random_reduced_braid(&sp.group, Subgroup::Left, sp.ephemeral_length, rng)?)
}

pub(super) fn check_ephemeral(sp: &SchemeParams, b: &BraidWord) -> Result<NormalForm, SchemeError> {
    if !sp.group.contains_word(Subgroup::Left, b) {
        return Err(BraidError::NotInSubgroup(Subgroup::Left).into());
    }
    Ok(b.normal_form())
}

pub fn dvs_sign<R: Rng + ?Sized>(
    signer: &KeyPair,
    verifier: &PublicKey,
    message: &[u8],
    sp: &SchemeParams,
    rng: &mut R,
) -> Result<DvsSignature, SchemeError> {
    let b = ephemeral(sp, rng)?;
    dvs_sign_with(signer, verifier, message, sp, &b)
}

pub fn dvs_sign_with(
    signer: &KeyPair,
    verifier: &PublicKey,
    message: &[u8],
    sp: &SchemeParams,
    b: &BraidWord,
) -> Result<DvsSignature, SchemeError> {
    let b = check_ephemeral(sp, b)?;
    let beta = verifier.x_prime.conjugate_by(&b);
    let h = challenge(&beta, message, &sp.hash);
    Ok(DvsSignature {
        message: message.to_vec(),
        alpha: verifier.x.conjugate_by(&b),
        delta: h.conjugate_by(signer.secret()),
    })
}

/// Accepts iff `δ ~ h` and `δ·x'_o ~ h·x_o` with `h` rebuilt from `β = a_c·α·a_c⁻¹`.
pub fn dvs_verify(sig: &DvsSignature, verifier: &KeyPair, signer: &PublicKey, sp: &SchemeParams) -> VerifyOutcome {
    if !same_index(sp.group.n(), &[&sig.alpha, &sig.delta, &signer.x, &verifier.public().x]) {
        return VerifyOutcome::reject(Check::BraidIndex, WorkCounters::default());
    }
    let beta = sig.alpha.conjugate_by(verifier.secret());
    let h = challenge(&beta, &sig.message, &sp.hash);
    signer_checks(&sig.delta, &h, signer, sp)
}

fn signer_checks(delta: &NormalForm, h: &NormalForm, signer: &PublicKey, sp: &SchemeParams) -> VerifyOutcome {
    run_checks(
        &[
            (Check::DeltaH, delta.clone(), h.clone()),
            (Check::DeltaXoHXo, delta.mul(&signer.x_prime), h.mul(&signer.x)),
        ],
        &sp.caps,
    )
}

pub fn bidvs_sign<R: Rng + ?Sized>(
    signer: &KeyPair,
    first: &PublicKey,
    second: &PublicKey,
    message: &[u8],
    sp: &SchemeParams,
    rng: &mut R,
) -> Result<(BiDvsSignature, BiDvsSignature), SchemeError> {
    let b = ephemeral(sp, rng)?;
    bidvs_sign_with(signer, first, second, message, sp, &b)
}

pub fn bidvs_sign_with(
    signer: &KeyPair,
    first: &PublicKey,
    second: &PublicKey,
    message: &[u8],
    sp: &SchemeParams,
    b: &BraidWord,
) -> Result<(BiDvsSignature, BiDvsSignature), SchemeError> {
    let b = check_ephemeral(sp, b)?;
    let (alpha_1, beta_1) = (first.x.conjugate_by(&b), first.x_prime.conjugate_by(&b));
    let (alpha_2, beta_2) = (second.x.conjugate_by(&b), second.x_prime.conjugate_by(&b));
    let h = challenge(&beta_1.mul(&beta_2), message, &sp.hash);
    let delta = h.conjugate_by(signer.secret());
    Ok((
        BiDvsSignature {
            recipient: Recipient::First,
            message: message.to_vec(),
            alpha_own: alpha_1,
            beta_other: beta_2,
            delta: delta.clone(),
        },
        BiDvsSignature {
            recipient: Recipient::Second,
            message: message.to_vec(),
            alpha_own: alpha_2,
            beta_other: beta_1,
            delta,
        },
    ))
}

/// `β_1·β_2` from the verifier's own recovered β and the one it was handed.
pub(super) fn ordered_product(recipient: Recipient, own: &NormalForm, other: &NormalForm) -> NormalForm {
    match recipient {
        Recipient::First => own.mul(other),
        Recipient::Second => other.mul(own),
    }
}

pub fn bidvs_verify(
    sig: &BiDvsSignature,
    verifier: &KeyPair,
    signer: &PublicKey,
    sp: &SchemeParams,
) -> VerifyOutcome {
    let n = sp.group.n();
    if !same_index(n, &[&sig.alpha_own, &sig.beta_other, &sig.delta, &signer.x, &verifier.public().x]) {
        return VerifyOutcome::reject(Check::BraidIndex, WorkCounters::default());
    }
    let own = sig.alpha_own.conjugate_by(verifier.secret());
    let product = ordered_product(sig.recipient, &own, &sig.beta_other);
    let h = challenge(&product, &sig.message, &sp.hash);
    signer_checks(&sig.delta, &h, signer, sp)
}
