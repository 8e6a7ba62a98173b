use std::fmt;

use super::factor::{PermutationFactor, MAX_STRANDS};
use super::normal_form::NormalForm;
use super::BraidError;

/// A signed Artin generator σ_i^{±1} with 1-based index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Letter {
    pub index: u8,
    pub positive: bool,
}

impl Letter {
    pub fn pos(i: usize) -> Self {
        Letter { index: i as u8, positive: true }
    }

    pub fn neg(i: usize) -> Self {
        Letter { index: i as u8, positive: false }
    }

    pub fn inverse(self) -> Self {
        Letter { index: self.index, positive: !self.positive }
    }

    pub fn sign(self) -> i64 {
        if self.positive {
            1
        } else {
            -1
        }
    }
}

/// A free word in the Artin generators of B_n. No relations are applied; use
/// [`BraidWord::normal_form`] to get the element it represents.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn identity(n: usize) -> Self {
        BraidWord { n, letters: Vec::new() }
    }

    pub fn new(n: usize, letters: Vec<Letter>) -> Result<Self, BraidError> {
        if !(2..=MAX_STRANDS).contains(&n) {
            return Err(BraidError::BadBraidIndex(n));
        }
        if let Some(l) = letters.iter().find(|l| l.index == 0 || l.index as usize >= n) {
            return Err(BraidError::GeneratorOutOfRange { index: l.index as usize, n });
        }
        Ok(BraidWord { n, letters })
    }

    /// Builds a word from signed indices: `3` is σ_3, `-3` is σ_3⁻¹.
    pub fn from_signed(n: usize, signed: &[i32]) -> Result<Self, BraidError> {
        let letters = signed
            .iter()
            .map(|&s| {
                if s == 0 {
                    Err(BraidError::GeneratorOutOfRange { index: 0, n })
                } else if s > 0 {
                    Ok(Letter::pos(s as usize))
                } else {
                    Ok(Letter::neg((-s) as usize))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(n, letters)
    }

    pub(crate) fn from_letters_unchecked(n: usize, letters: Vec<Letter>) -> Self {
        BraidWord { n, letters }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign()).sum()
    }

    /// Concatenation; the word for the product `self · other`.
    pub fn multiply(&self, other: &Self) -> Result<Self, BraidError> {
        if self.n != other.n {
            return Err(BraidError::IndexMismatch(self.n, other.n));
        }
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters })
    }

    /// Reversed letters with flipped signs.
    pub fn inverse(&self) -> Self {
        BraidWord { n: self.n, letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// τ(w) = Δ⁻¹·w·Δ, letter by letter σ_i ↦ σ_{n-i}.
    pub fn tau(&self) -> Self {
        let n = self.n as u8;
        BraidWord {
            n: self.n,
            letters: self
                .letters
                .iter()
                .map(|l| Letter { index: n - l.index, positive: l.positive })
                .collect(),
        }
    }

    /// `c · self · c⁻¹` as a word.
    pub fn conjugate_by(&self, c: &Self) -> Result<Self, BraidError> {
        c.multiply(self)?.multiply(&c.inverse())
    }

    /// Shifts every generator index by `offset` into a larger braid group.
    pub fn shifted(&self, offset: usize, n: usize) -> Result<Self, BraidError> {
        Self::new(
            n,
            self.letters
                .iter()
                .map(|l| Letter { index: l.index + offset as u8, positive: l.positive })
                .collect(),
        )
    }

    pub fn normal_form(&self) -> NormalForm {
        // σ_i⁻¹ = Δ⁻¹·X_i with X_i simple. Each Δ⁻¹ is moved to the far left, which
        // applies τ once to every simple it passes.
        let n = self.n;
        let mut after = self.letters.iter().filter(|l| !l.positive).count() as i64;
        let total = after;
        let mut factors = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            let sigma = PermutationFactor::generator(n, l.index as usize);
            if l.positive {
                factors.push(sigma.tau_pow(after));
            } else {
                after -= 1;
                factors.push(sigma.left_complement().tau_pow(after));
            }
        }
        NormalForm::assemble(n, -total, factors)
    }

    pub fn equals(&self, other: &Self) -> Result<bool, BraidError> {
        if self.n != other.n {
            return Err(BraidError::IndexMismatch(self.n, other.n));
        }
        Ok(self.normal_form() == other.normal_form())
    }

    /// The permutation induced on strands (0-based images), ignoring crossing signs.
    pub fn permutation(&self) -> Vec<u8> {
        let mut pos: Vec<u8> = (0..self.n as u8).collect();
        for l in &self.letters {
            let (a, b) = (l.index - 1, l.index);
            for p in pos.iter_mut() {
                if *p == a {
                    *p = b;
                } else if *p == b {
                    *p = a;
                }
            }
        }
        pos
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}{}", self.n, self)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if l.positive {
                write!(f, "{}", l.index)?;
            } else {
                write!(f, "-{}", l.index)?;
            }
        }
        write!(f, "]")
    }
}
