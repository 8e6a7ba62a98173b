//! Garside left normal form `Δ^inf · A_1 ⋯ A_k` and exact group arithmetic on it.

use std::fmt;

use super::factor::{left_weight, PermutationFactor, MAX_STRANDS};
use super::word::{BraidWord, Letter};
use super::BraidError;

/// Magic prefix of the canonical binary encoding.
pub const NF_MAGIC: [u8; 4] = *b"BRD1";
pub const NF_VERSION: u8 = 0x01;

/// Canonical representative of a braid group element.
///
/// Two words represent the same element exactly when their normal forms are equal,
/// so `PartialEq`/`Hash` on this type are element equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    n: usize,
    inf: i64,
    factors: Vec<PermutationFactor>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum DecodeError {
    #[error("bad magic")]
    BadMagic,
    #[error("unsupported version {0:#04x}")]
    BadVersion(u8),
    #[error("truncated input")]
    Truncated,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("not in canonical form: {0}")]
    NotCanonical(&'static str),
}

impl NormalForm {
    pub fn identity(n: usize) -> Self {
        NormalForm { n, inf: 0, factors: Vec::new() }
    }

    pub fn delta_power(n: usize, power: i64) -> Self {
        NormalForm { n, inf: power, factors: Vec::new() }
    }

    /// The element represented by a single simple factor.
    pub fn from_factor(f: PermutationFactor) -> Self {
        Self::assemble(f.n(), 0, vec![f])
    }

    /// Normalizes `Δ^inf · factors` where the factors are arbitrary simple elements.
    pub(crate) fn assemble(n: usize, inf: i64, factors: Vec<PermutationFactor>) -> Self {
        let mut nf = NormalForm { n, inf, factors };
        nf.normalize();
        nf
    }

    /// Left-weighting sweeps until no pair changes, then Δ-absorption and trimming.
    fn normalize(&mut self) {
        let f = &mut self.factors;
        if f.len() > 1 {
            loop {
                let mut changed = false;
                for i in (0..f.len() - 1).rev() {
                    let (l, r) = f.split_at_mut(i + 1);
                    changed |= left_weight(&mut l[i], &mut r[0]);
                }
                if !changed {
                    break;
                }
                // A second direction converges faster on products built by left multiplication.
                let mut changed = false;
                for i in 0..f.len() - 1 {
                    let (l, r) = f.split_at_mut(i + 1);
                    changed |= left_weight(&mut l[i], &mut r[0]);
                }
                if !changed {
                    break;
                }
            }
        }
        let leading = f.iter().take_while(|a| a.is_delta()).count();
        if leading > 0 {
            f.drain(..leading);
            self.inf += leading as i64;
        }
        while f.last().is_some_and(|a| a.is_identity()) {
            f.pop();
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn inf(&self) -> i64 {
        self.inf
    }

    #[inline]
    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[PermutationFactor] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    /// Sum of generator exponents; a conjugacy invariant.
    pub fn exponent_sum(&self) -> i64 {
        let half_twist = (self.n * (self.n - 1) / 2) as i64;
        self.inf * half_twist + self.factors.iter().map(|f| f.crossings() as i64).sum::<i64>()
    }

    fn check_index(&self, other: &Self) -> Result<(), BraidError> {
        if self.n != other.n {
            return Err(BraidError::IndexMismatch(self.n, other.n));
        }
        Ok(())
    }

    /// Group product `self · other`.
    pub fn try_mul(&self, other: &Self) -> Result<Self, BraidError> {
        self.check_index(other)?;
        Ok(self.mul(other))
    }

    /// Group product; panics on mismatched braid index.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "braid index mismatch");
        if other.is_identity() {
            return self.clone();
        }
        if self.is_identity() {
            return other.clone();
        }
        // Δ^u A · Δ^v B = Δ^{u+v} τ^v(A) B
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        factors.extend(self.factors.iter().map(|a| a.tau_pow(other.inf)));
        factors.extend_from_slice(&other.factors);
        Self::assemble(self.n, self.inf + other.inf, factors)
    }

    pub fn inverse(&self) -> Self {
        // (Δ^u A_1⋯A_k)⁻¹ = Δ^{-u-k} τ^{u+k}(∂A_k) ⋯ τ^{u+1}(∂A_1)
        let k = self.factors.len() as i64;
        let factors = self
            .factors
            .iter()
            .enumerate()
            .rev()
            .map(|(j, a)| a.right_complement().tau_pow(self.inf + j as i64 + 1))
            .collect();
        Self::assemble(self.n, -self.inf - k, factors)
    }

    /// `c · self · c⁻¹`.
    pub fn conjugate_by(&self, c: &Self) -> Self {
        c.mul(self).mul(&c.inverse())
    }

    /// `s⁻¹ · self · s` for a simple `s`, computed without a general inverse.
    pub fn conjugate_by_simple(&self, s: &PermutationFactor) -> Self {
        // s⁻¹ = Δ⁻¹·X with X·s = Δ, and X·Δ^u = Δ^u·τ^u(X).
        let x = s.left_complement().tau_pow(self.inf);
        let mut factors = Vec::with_capacity(self.factors.len() + 2);
        factors.push(x);
        factors.extend_from_slice(&self.factors);
        factors.push(*s);
        Self::assemble(self.n, self.inf - 1, factors)
    }

    /// τ(x) = Δ⁻¹·x·Δ.
    pub fn tau(&self) -> Self {
        NormalForm {
            n: self.n,
            inf: self.inf,
            factors: self.factors.iter().map(|f| f.tau()).collect(),
        }
    }

    /// Checks that every adjacent pair satisfies `S(A_{i+1}) ⊆ F(A_i)` and factors are proper.
    pub fn is_left_weighted(&self) -> bool {
        self.factors.iter().all(|f| !f.is_identity() && !f.is_delta())
            && self
                .factors
                .windows(2)
                .all(|w| w[1].starting_set() & !w[0].finishing_set() == 0)
    }

    /// A word spelling this element: Δ-power first, then each factor's positive word.
    pub fn to_word(&self) -> BraidWord {
        let mut letters = Vec::new();
        let delta: Vec<usize> = PermutationFactor::delta(self.n).to_generators();
        if self.inf >= 0 {
            for _ in 0..self.inf {
                letters.extend(delta.iter().map(|&g| Letter::pos(g)));
            }
        } else {
            for _ in 0..-self.inf {
                letters.extend(delta.iter().rev().map(|&g| Letter::neg(g)));
            }
        }
        for f in &self.factors {
            letters.extend(f.to_generators().into_iter().map(Letter::pos));
        }
        BraidWord::from_letters_unchecked(self.n, letters)
    }

    /// Canonical binary encoding: `BRD1`, version, n (u16), inf (i32), k (u32), then
    /// each factor as n bytes of 1-based strand images. All integers big-endian.
    pub fn encode(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(15 + self.factors.len() * self.n);
        self.encode_into(&mut out);
        out
    }

    pub fn encode_into(&self, out: &mut Vec<u8>) {
        out.extend_from_slice(&NF_MAGIC);
        out.push(NF_VERSION);
        out.extend_from_slice(&(self.n as u16).to_be_bytes());
        out.extend_from_slice(&(self.inf as i32).to_be_bytes());
        out.extend_from_slice(&(self.factors.len() as u32).to_be_bytes());
        for f in &self.factors {
            out.extend(f.images().iter().map(|v| v + 1));
        }
    }

    /// Decodes one normal form and returns it with the number of bytes consumed.
    /// Non-canonical input (trivial factors, non-left-weighted pairs) is rejected.
    pub fn decode_prefix(bytes: &[u8]) -> Result<(Self, usize), DecodeError> {
        const HEADER: usize = 15;
        if bytes.len() < 4 {
            return Err(DecodeError::Truncated);
        }
        if bytes[..4] != NF_MAGIC {
            return Err(DecodeError::BadMagic);
        }
        if bytes.len() < HEADER {
            return Err(DecodeError::Truncated);
        }
        if bytes[4] != NF_VERSION {
            return Err(DecodeError::BadVersion(bytes[4]));
        }
        let n = u16::from_be_bytes([bytes[5], bytes[6]]) as usize;
        if !(2..=MAX_STRANDS).contains(&n) {
            return Err(DecodeError::IndexOutOfRange(format!("braid index {n}")));
        }
        let inf = i32::from_be_bytes(bytes[7..11].try_into().unwrap()) as i64;
        let k = u32::from_be_bytes(bytes[11..15].try_into().unwrap()) as usize;
        let end = k
            .checked_mul(n)
            .and_then(|len| len.checked_add(HEADER))
            .ok_or(DecodeError::Truncated)?;
        if bytes.len() < end {
            return Err(DecodeError::Truncated);
        }
        let mut factors = Vec::with_capacity(k);
        for chunk in bytes[HEADER..end].chunks_exact(n) {
            let mut img = [0u8; MAX_STRANDS];
            for (slot, &v) in img.iter_mut().zip(chunk) {
                if v == 0 || v as usize > n {
                    return Err(DecodeError::IndexOutOfRange(format!("strand image {v}")));
                }
                *slot = v - 1;
            }
            let f = PermutationFactor::from_images(&img[..n])
                .ok_or(DecodeError::NotCanonical("factor is not a permutation"))?;
            factors.push(f);
        }
        let nf = NormalForm { n, inf, factors };
        if !nf.is_left_weighted() {
            return Err(DecodeError::NotCanonical("factors are not left-weighted"));
        }
        Ok((nf, end))
    }

    pub fn decode(bytes: &[u8]) -> Result<Self, DecodeError> {
        let (nf, used) = Self::decode_prefix(bytes)?;
        if used != bytes.len() {
            return Err(DecodeError::NotCanonical("trailing bytes"));
        }
        Ok(nf)
    }
}

impl fmt::Debug for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}<Δ^{}", self.n, self.inf)?;
        for a in &self.factors {
            write!(f, " {a:?}")?;
        }
        write!(f, ">")
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ^{}", self.inf)?;
        for a in &self.factors {
            write!(f, " · {a:?}")?;
        }
        Ok(())
    }
}
