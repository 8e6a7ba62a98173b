//! Designated-verifier proxy signatures, for one verifier and for two.

use rand::Rng;

use super::designated::{check_ephemeral, ephemeral, ordered_product};
use super::{check_warrant, run_checks, same_index, Check, KeyPair, ProxyKey, PublicKey, Recipient};
use super::{SchemeError, SchemeParams, VerifyOutcome, Warrant};
use crate::braid::{BraidWord, NormalForm};
use crate::conjugacy::WorkCounters;
use crate::hashing::challenge;

/// `(m_w, α, γ, δ, θ, t_o)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DvpsSignature {
    pub warrant: Warrant,
    pub alpha: NormalForm,
    pub gamma: NormalForm,
    pub delta: NormalForm,
    pub theta: NormalForm,
    pub t_o: NormalForm,
}

/// `(m, α_own, β_other, γ, δ, θ, t_o, m_w)`. The message must equal the warrant's scope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiDvpsSignature {
    pub recipient: Recipient,
    pub message: Vec<u8>,
    pub alpha_own: NormalForm,
    pub beta_other: NormalForm,
    pub gamma: NormalForm,
    pub delta: NormalForm,
    pub theta: NormalForm,
    pub t_o: NormalForm,
    pub warrant: Warrant,
}

/// γ, δ, θ for challenge `h`.
fn proxy_parts(pkey: &ProxyKey, proxy: &KeyPair, h: &NormalForm, b: &NormalForm) -> [NormalForm; 3] {
    let a_p = proxy.secret();
    let unwrapped = a_p.inverse().mul(&pkey.pk).mul(a_p);
    [h.conjugate_by(b), proxy.public().x.conjugate_by(b), unwrapped.conjugate_by(b)]
}

fn proxy_checks(
    h: &NormalForm,
    gamma: &NormalForm,
    delta: &NormalForm,
    theta: &NormalForm,
    t_o: &NormalForm,
    proxy: &PublicKey,
    sp: &SchemeParams,
) -> VerifyOutcome {
    run_checks(
        &[
            (Check::GammaH, gamma.clone(), h.clone()),
            (Check::DeltaXp, delta.clone(), proxy.x.clone()),
            (Check::GammaDeltaHXp, gamma.mul(delta), h.mul(&proxy.x)),
            (Check::GammaThetaHTo, gamma.mul(theta), h.mul(t_o)),
        ],
        &sp.caps,
    )
}

pub fn dvps_sign<R: Rng + ?Sized>(
    pkey: &ProxyKey,
    proxy: &KeyPair,
    verifier: &PublicKey,
    sp: &SchemeParams,
    rng: &mut R,
) -> Result<DvpsSignature, SchemeError> {
    let b = ephemeral(sp, rng)?;
    dvps_sign_with(pkey, proxy, verifier, sp, &b)
}

pub fn dvps_sign_with(
    pkey: &ProxyKey,
    proxy: &KeyPair,
    verifier: &PublicKey,
    sp: &SchemeParams,
    b: &BraidWord,
) -> Result<DvpsSignature, SchemeError> {
    let b = check_ephemeral(sp, b)?;
    let d = &pkey.delegation;
    let beta = verifier.x_prime.conjugate_by(&b);
    let h = challenge(&beta, &d.warrant.to_bytes(), &sp.hash);
    let [gamma, delta, theta] = proxy_parts(pkey, proxy, &h, &b);
    Ok(DvpsSignature {
        warrant: d.warrant.clone(),
        alpha: verifier.x.conjugate_by(&b),
        gamma,
        delta,
        theta,
        t_o: d.t_o.clone(),
    })
}

/// Accepts iff the warrant is current and `γ ~ h`, `δ ~ x_p`, `γδ ~ h·x_p`, `γθ ~ h·t_o`.
pub fn dvps_verify(
    sig: &DvpsSignature,
    verifier: &KeyPair,
    proxy: &PublicKey,
    now: u64,
    sp: &SchemeParams,
) -> VerifyOutcome {
    if let Some(check) = check_warrant(&sig.warrant, now) {
        return VerifyOutcome::reject(check, WorkCounters::default());
    }
    let n = sp.group.n();
    if !same_index(n, &[&sig.alpha, &sig.gamma, &sig.delta, &sig.theta, &sig.t_o, &proxy.x, &verifier.public().x]) {
        return VerifyOutcome::reject(Check::BraidIndex, WorkCounters::default());
    }
    let beta = sig.alpha.conjugate_by(verifier.secret());
    let h = challenge(&beta, &sig.warrant.to_bytes(), &sp.hash);
    proxy_checks(&h, &sig.gamma, &sig.delta, &sig.theta, &sig.t_o, proxy, sp)
}

pub fn bidvps_sign<R: Rng + ?Sized>(
    pkey: &ProxyKey,
    proxy: &KeyPair,
    first: &PublicKey,
    second: &PublicKey,
    sp: &SchemeParams,
    rng: &mut R,
) -> Result<(BiDvpsSignature, BiDvpsSignature), SchemeError> {
    let b = ephemeral(sp, rng)?;
    bidvps_sign_with(pkey, proxy, first, second, sp, &b)
}

pub fn bidvps_sign_with(
    pkey: &ProxyKey,
    proxy: &KeyPair,
    first: &PublicKey,
    second: &PublicKey,
    sp: &SchemeParams,
    b: &BraidWord,
) -> Result<(BiDvpsSignature, BiDvpsSignature), SchemeError> {
    let b = check_ephemeral(sp, b)?;
    let d = &pkey.delegation;
    let (alpha_1, beta_1) = (first.x.conjugate_by(&b), first.x_prime.conjugate_by(&b));
    let (alpha_2, beta_2) = (second.x.conjugate_by(&b), second.x_prime.conjugate_by(&b));
    let h = challenge(&beta_1.mul(&beta_2), &d.warrant.to_bytes(), &sp.hash);
    let [gamma, delta, theta] = proxy_parts(pkey, proxy, &h, &b);
    let make = |recipient, alpha_own, beta_other| BiDvpsSignature {
        recipient,
        message: d.warrant.message_scope.clone(),
        alpha_own,
        beta_other,
        gamma: gamma.clone(),
        delta: delta.clone(),
        theta: theta.clone(),
        t_o: d.t_o.clone(),
        warrant: d.warrant.clone(),
    };
    Ok((make(Recipient::First, alpha_1, beta_2), make(Recipient::Second, alpha_2, beta_1)))
}

pub fn bidvps_verify(
    sig: &BiDvpsSignature,
    verifier: &KeyPair,
    proxy: &PublicKey,
    now: u64,
    sp: &SchemeParams,
) -> VerifyOutcome {
    if let Some(check) = check_warrant(&sig.warrant, now) {
        return VerifyOutcome::reject(check, WorkCounters::default());
    }
    if sig.message != sig.warrant.message_scope {
        return VerifyOutcome::reject(Check::WarrantScope, WorkCounters::default());
    }
    let n = sp.group.n();
    let elements = [
        &sig.alpha_own, &sig.beta_other, &sig.gamma, &sig.delta, &sig.theta, &sig.t_o, &proxy.x,
        &verifier.public().x,
    ];
    if !same_index(n, &elements) {
        return VerifyOutcome::reject(Check::BraidIndex, WorkCounters::default());
    }
    let own = sig.alpha_own.conjugate_by(verifier.secret());
    let product = ordered_product(sig.recipient, &own, &sig.beta_other);
    let h = challenge(&product, &sig.warrant.to_bytes(), &sp.hash);
    proxy_checks(&h, &sig.gamma, &sig.delta, &sig.theta, &sig.t_o, proxy, sp)
}
