//! The two one-way maps used by every scheme: `h1` hashes bytes into B_{l+r},
//! `h2` hashes a braid element to a 256-bit digest.
//!
//! Both are built on SHA-256. `h2` digests the canonical normal-form encoding, so
//! equal elements always hash equally. `h1` expands a digest of the message in
//! counter mode and reads one positive generator per byte.

use sha2::{Digest as _, Sha256};

use crate::braid::{BraidWord, GroupParams, Letter, NormalForm};

/// Identifier written into file headers for the hash function in use.
pub const HASH_ID_SHA256: u8 = 0x01;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Digest(pub [u8; 32]);

impl Digest {
    pub fn as_bytes(&self) -> &[u8; 32] {
        &self.0
    }
}

impl std::fmt::Debug for Digest {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for b in self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HashParams {
    pub params: GroupParams,
    /// Number of letters `h1` emits.
    pub braid_word_length: usize,
}

impl HashParams {
    pub fn new(params: GroupParams, braid_word_length: usize) -> Self {
        assert!(braid_word_length >= 1, "h1 needs at least one letter");
        HashParams { params, braid_word_length }
    }
}

fn sha256(parts: &[&[u8]]) -> [u8; 32] {
    let mut h = Sha256::new();
    for p in parts {
        h.update(p);
    }
    h.finalize().into()
}

pub fn h2(x: &NormalForm) -> Digest {
    Digest(sha256(&[&x.encode()]))
}

/// The positive word `h1` builds before normalization.
pub fn h1_word(msg: &[u8], hp: &HashParams) -> BraidWord {
    let n = hp.params.n();
    let seed = sha256(&[msg]);
    let mut letters = Vec::with_capacity(hp.braid_word_length);
    let mut counter: u32 = 0;
    while letters.len() < hp.braid_word_length {
        let block = sha256(&[&seed, &counter.to_be_bytes()]);
        for v in block {
            if letters.len() == hp.braid_word_length {
                break;
            }
            letters.push(Letter::pos(v as usize % (n - 1) + 1));
        }
        counter += 1;
    }
    BraidWord::new(n, letters).expect("indices are in range by construction")
}

pub fn h1(msg: &[u8], hp: &HashParams) -> NormalForm {
    h1_word(msg, hp).normal_form()
}

/// `d ‖ m`: the digest/message combiner shared by signers and verifiers.
pub fn combine(d: &Digest, m: &[u8]) -> Vec<u8> {
    let mut out = Vec::with_capacity(32 + m.len());
    out.extend_from_slice(&d.0);
    out.extend_from_slice(m);
    out
}

/// The challenge braid `h1(h2(x) ‖ m)`.
pub fn challenge(x: &NormalForm, m: &[u8], hp: &HashParams) -> NormalForm {
    h1(&combine(&h2(x), m), hp)
}
