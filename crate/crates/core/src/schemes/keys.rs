use rand::Rng;

use super::{SchemeError, SchemeParams};
use crate::braid::{random_reduced_braid, BraidWord, GroupParams, Letter, NormalForm, Subgroup};

/// The public pair `(x_u, x'_u = a_u·x_u·a_u⁻¹)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PublicKey {
    pub params: GroupParams,
    pub x: NormalForm,
    pub x_prime: NormalForm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KeyPair {
    secret: BraidWord,
    secret_nf: NormalForm,
    public: PublicKey,
}

impl KeyPair {
    /// Builds a key pair from a chosen secret `a_u ∈ RB_r` and public braid `x_u`.
    ///
    /// The secret is kept as the canonical word of its element (see
    /// [`KeyPair::restricted_secret`]), so two spellings of one element give equal keys.
    pub fn from_parts(params: GroupParams, secret: BraidWord, x: NormalForm) -> Result<Self, SchemeError> {
        if x.n() != params.n() || !params.contains_word(Subgroup::Right, &secret) {
            return Err(crate::braid::BraidError::NotInSubgroup(Subgroup::Right).into());
        }
        let l = params.l() as u8;
        let letters = secret.letters().iter().map(|c| Letter { index: c.index - l, positive: c.positive }).collect();
        let restricted = BraidWord::new(params.r(), letters)?.normal_form();
        Self::from_restricted(params, &restricted, x)
    }

    /// Inverse of [`KeyPair::restricted_secret`].
    pub fn from_restricted(params: GroupParams, secret: &NormalForm, x: NormalForm) -> Result<Self, SchemeError> {
        if secret.n() != params.r() || x.n() != params.n() {
            return Err(SchemeError::ParamsMismatch);
        }
        let secret = secret.to_word().shifted(params.l(), params.n())?;
        let secret_nf = secret.normal_form();
        let x_prime = x.conjugate_by(&secret_nf);
        Ok(KeyPair { secret, secret_nf, public: PublicKey { params, x, x_prime } })
    }

    /// `a_u` as an element of B_r, i.e. with every index lowered by `l`.
    pub fn restricted_secret(&self) -> NormalForm {
        let l = self.params().l() as u8;
        let letters =
            self.secret.letters().iter().map(|c| Letter { index: c.index - l, positive: c.positive }).collect();
        BraidWord::new(self.params().r(), letters).expect("secret lies in RB_r").normal_form()
    }

    pub fn params(&self) -> GroupParams {
        self.public.params
    }

    pub fn public(&self) -> &PublicKey {
        &self.public
    }

    pub fn secret_word(&self) -> &BraidWord {
        &self.secret
    }

    pub fn secret(&self) -> &NormalForm {
        &self.secret_nf
    }
}

/// `x_u ← B_{l+r}`, `a_u ← RB_r`, both of `key_length` letters.
pub fn keygen<R: Rng + ?Sized>(sp: &SchemeParams, rng: &mut R) -> Result<KeyPair, SchemeError> {
    let x = random_reduced_braid(&sp.group, Subgroup::Full, sp.key_length, rng)?.normal_form();
    let a = random_reduced_braid(&sp.group, Subgroup::Right, sp.key_length, rng)?;
    KeyPair::from_parts(sp.group, a, x)
}
