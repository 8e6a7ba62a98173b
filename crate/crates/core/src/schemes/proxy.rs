//! Proxy signatures with delegation by warrant.
//!
//! The original signer sends `(m_w, z_o, t_o = a_o·z_o·a_o⁻¹)`. The proxy checks
//! `t_o·x'_o ~ z_o·x_o` and derives `PK = a_p·t_o·a_p⁻¹`. A signature is
//! `(γ, δ, θ, t_o, m_w)` with `γ = b·h·b⁻¹`, `δ = b·x_p·b⁻¹`, `θ = b·a_p⁻¹·PK·a_p·b⁻¹`.

use rand::Rng;

use super::{check_warrant, run_checks, same_index, Check, KeyPair, PublicKey, SchemeError, SchemeParams};
use super::{VerifyOutcome, Warrant};
use crate::braid::{random_reduced_braid, BraidWord, NormalForm, Subgroup};
use crate::conjugacy::{is_conjugate, ConjugacyCaps, Verdict, WorkCounters};
use crate::hashing::challenge;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Delegation {
    pub warrant: Warrant,
    pub z_o: NormalForm,
    pub t_o: NormalForm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProxyKey {
    pub pk: NormalForm,
    pub delegation: Delegation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProxySignature {
    pub gamma: NormalForm,
    pub delta: NormalForm,
    pub theta: NormalForm,
    pub t_o: NormalForm,
    pub warrant: Warrant,
}

pub fn delegate<R: Rng + ?Sized>(
    signer: &KeyPair,
    warrant: Warrant,
    sp: &SchemeParams,
    rng: &mut R,
) -> Result<Delegation, SchemeError> {
    let subgroup = if sp.faithful { Subgroup::Left } else { Subgroup::Full };
    let z_o = random_reduced_braid(&sp.group, subgroup, sp.key_length, rng)?;
    delegate_with(signer, warrant, &z_o)
}

/// Delegation with a caller-chosen `z_o`.
pub fn delegate_with(signer: &KeyPair, warrant: Warrant, z_o: &BraidWord) -> Result<Delegation, SchemeError> {
    if z_o.n() != signer.params().n() {
        return Err(SchemeError::ParamsMismatch);
    }
    let z_o = z_o.normal_form();
    let t_o = z_o.conjugate_by(signer.secret());
    Ok(Delegation { warrant, z_o, t_o })
}

/// Checks `t_o·x'_o ~ z_o·x_o` and derives the proxy key.
pub fn accept_delegation(
    proxy: &KeyPair,
    d: &Delegation,
    signer: &PublicKey,
    caps: &ConjugacyCaps,
) -> Result<(ProxyKey, WorkCounters), SchemeError> {
    let n = proxy.params().n();
    if signer.params != proxy.params() || !same_index(n, &[&d.z_o, &d.t_o]) {
        return Err(SchemeError::ParamsMismatch);
    }
    let lhs = d.z_o.mul(&signer.x);
    let rhs = d.t_o.mul(&signer.x_prime);
    let decision = is_conjugate(&lhs, &rhs, caps)?;
    match decision.verdict {
        Verdict::Conjugate => {
            let pk = d.t_o.conjugate_by(proxy.secret());
            Ok((ProxyKey { pk, delegation: d.clone() }, decision.work))
        }
        Verdict::NotConjugate => Err(SchemeError::DelegationCheckFailed),
        Verdict::Inconclusive => Err(SchemeError::ConjugacyInconclusive),
    }
}

pub fn proxy_sign<R: Rng + ?Sized>(
    pkey: &ProxyKey,
    proxy: &KeyPair,
    signer: &PublicKey,
    sp: &SchemeParams,
    rng: &mut R,
) -> Result<ProxySignature, SchemeError> {
    let b = random_reduced_braid(&sp.group, Subgroup::Left, sp.ephemeral_length, rng)?;
    proxy_sign_with(pkey, proxy, signer, sp, &b)
}

/// Signing with a caller-chosen ephemeral `b ∈ LB_l`.
pub fn proxy_sign_with(
    pkey: &ProxyKey,
    proxy: &KeyPair,
    signer: &PublicKey,
    sp: &SchemeParams,
    b: &BraidWord,
) -> Result<ProxySignature, SchemeError> {
    if !sp.group.contains_word(Subgroup::Left, b) {
        return Err(crate::braid::BraidError::NotInSubgroup(Subgroup::Left).into());
    }
    let d = &pkey.delegation;
    let b = b.normal_form();
    let h = challenge(&d.t_o.mul(&signer.x_prime), &d.warrant.to_bytes(), &sp.hash);
    let a_p = proxy.secret();
    let unwrapped = a_p.inverse().mul(&pkey.pk).mul(a_p);
    Ok(ProxySignature {
        gamma: h.conjugate_by(&b),
        delta: proxy.public().x.conjugate_by(&b),
        theta: unwrapped.conjugate_by(&b),
        t_o: d.t_o.clone(),
        warrant: d.warrant.clone(),
    })
}

/// Accepts iff the warrant is current and `γθ ~ h·t_o`, `γδ ~ h·x_p`.
pub fn proxy_verify(
    sig: &ProxySignature,
    signer: &PublicKey,
    proxy: &PublicKey,
    now: u64,
    sp: &SchemeParams,
) -> VerifyOutcome {
    if let Some(check) = check_warrant(&sig.warrant, now) {
        return VerifyOutcome::reject(check, WorkCounters::default());
    }
    let n = sp.group.n();
    if !same_index(n, &[&sig.gamma, &sig.delta, &sig.theta, &sig.t_o, &signer.x_prime, &proxy.x]) {
        return VerifyOutcome::reject(Check::BraidIndex, WorkCounters::default());
    }
    let h = challenge(&sig.t_o.mul(&signer.x_prime), &sig.warrant.to_bytes(), &sp.hash);
    run_checks(
        &[
            (Check::GammaThetaHTo, sig.gamma.mul(&sig.theta), h.mul(&sig.t_o)),
            (Check::GammaDeltaHXp, sig.gamma.mul(&sig.delta), h.mul(&proxy.x)),
        ],
        &sp.caps,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::GroupParams;
    use crate::schemes::keygen;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sp() -> SchemeParams {
        SchemeParams::new(GroupParams::new(3, 3).unwrap(), 16, 16, 16)
    }

    fn warrant() -> Warrant {
        Warrant::new("alice", "bob", 100, 200, "order #7").unwrap()
    }

    #[test]
    fn identity_secret_delegation_is_plain() {
        let sp = sp();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let x = random_reduced_braid(&sp.group, Subgroup::Full, 16, &mut rng).unwrap().normal_form();
        let alice = KeyPair::from_parts(sp.group, BraidWord::identity(6), x).unwrap();
        let bob = keygen(&sp, &mut rng).unwrap();
        let d = delegate(&alice, warrant(), &sp, &mut rng).unwrap();
        assert_eq!(d.t_o, d.z_o);
        assert!(accept_delegation(&bob, &d, alice.public(), &sp.caps).is_ok());
    }

    #[test]
    fn honest_chain_verifies() {
        let sp = sp();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let alice = keygen(&sp, &mut rng).unwrap();
        let bob = keygen(&sp, &mut rng).unwrap();
        let d = delegate(&alice, warrant(), &sp, &mut rng).unwrap();
        let (pkey, _) = accept_delegation(&bob, &d, alice.public(), &sp.caps).unwrap();
        let a_p = bob.secret();
        assert_eq!(a_p.inverse().mul(&pkey.pk).mul(a_p), d.t_o);
        let sig = proxy_sign(&pkey, &bob, alice.public(), &sp, &mut rng).unwrap();
        let out = proxy_verify(&sig, alice.public(), bob.public(), 150, &sp);
        assert!(out.accepted, "{out:?}");
    }

    #[test]
    fn identity_ephemeral_exposes_plain_components() {
        let sp = sp();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let alice = keygen(&sp, &mut rng).unwrap();
        let bob = keygen(&sp, &mut rng).unwrap();
        let d = delegate(&alice, warrant(), &sp, &mut rng).unwrap();
        let (pkey, _) = accept_delegation(&bob, &d, alice.public(), &sp.caps).unwrap();
        let sig = proxy_sign_with(&pkey, &bob, alice.public(), &sp, &BraidWord::identity(6)).unwrap();
        let h = challenge(&d.t_o.mul(&alice.public().x_prime), &d.warrant.to_bytes(), &sp.hash);
        assert_eq!(sig.gamma, h);
        assert_eq!(sig.delta, bob.public().x);
        assert_eq!(sig.theta, d.t_o);
        assert!(proxy_verify(&sig, alice.public(), bob.public(), 100, &sp).accepted);
    }

    #[test]
    fn tampered_delegation_is_refused() {
        let sp = sp();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let alice = keygen(&sp, &mut rng).unwrap();
        let bob = keygen(&sp, &mut rng).unwrap();
        let mut d = delegate(&alice, warrant(), &sp, &mut rng).unwrap();
        d.z_o = d.z_o.mul(&BraidWord::from_signed(6, &[1]).unwrap().normal_form());
        assert_eq!(
            accept_delegation(&bob, &d, alice.public(), &sp.caps).unwrap_err(),
            SchemeError::DelegationCheckFailed
        );
    }

    #[test]
    fn window_is_enforced() {
        let sp = sp();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let alice = keygen(&sp, &mut rng).unwrap();
        let bob = keygen(&sp, &mut rng).unwrap();
        let d = delegate(&alice, warrant(), &sp, &mut rng).unwrap();
        let (pkey, _) = accept_delegation(&bob, &d, alice.public(), &sp.caps).unwrap();
        let sig = proxy_sign(&pkey, &bob, alice.public(), &sp, &mut rng).unwrap();
        for now in [99, 201] {
            let out = proxy_verify(&sig, alice.public(), bob.public(), now, &sp);
            assert_eq!(out.failed_check, Some(Check::WarrantWindow));
        }
        assert!(proxy_verify(&sig, alice.public(), bob.public(), 200, &sp).accepted);
    }
}
