//! Positive permutation braids (simple elements of the classical Garside structure).
//!
//! A factor is stored as the permutation it induces on strand positions:
//! `img[i]` is the final position of the strand that starts at position `i`
//! (0-based internally, 1-based on the wire). Products read top to bottom,
//! so `A·B` sends `i` to `B[A[i]]`.

use std::fmt;

/// Largest braid index the engine supports. Generator sets are kept in `u16` masks.
pub const MAX_STRANDS: usize = 16;

/// A positive braid in which every pair of strands crosses at most once.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermutationFactor {
    n: u8,
    img: [u8; MAX_STRANDS],
}

impl PermutationFactor {
    pub fn identity(n: usize) -> Self {
        debug_assert!((1..=MAX_STRANDS).contains(&n));
        let mut img = [0u8; MAX_STRANDS];
        for (i, v) in img.iter_mut().enumerate() {
            *v = i as u8;
        }
        PermutationFactor { n: n as u8, img }
    }

    /// The half twist Δ: `i ↦ n-1-i`.
    pub fn delta(n: usize) -> Self {
        let mut f = Self::identity(n);
        for i in 0..n {
            f.img[i] = (n - 1 - i) as u8;
        }
        f
    }

    /// The Artin generator σ_i (1-based `i`) as a simple element.
    pub fn generator(n: usize, i: usize) -> Self {
        debug_assert!(i >= 1 && i < n);
        let mut f = Self::identity(n);
        f.img.swap(i - 1, i);
        f
    }

    /// Builds a factor from 0-based strand images. Returns `None` unless `img` is a permutation.
    pub fn from_images(img: &[u8]) -> Option<Self> {
        let n = img.len();
        if n == 0 || n > MAX_STRANDS {
            return None;
        }
        let mut seen = 0u32;
        let mut f = Self::identity(n);
        for (i, &v) in img.iter().enumerate() {
            if (v as usize) >= n || seen & (1 << v) != 0 {
                return None;
            }
            seen |= 1 << v;
            f.img[i] = v;
        }
        Some(f)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// 0-based images of strands `0..n`.
    #[inline]
    pub fn images(&self) -> &[u8] {
        &self.img[..self.n as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images().iter().enumerate().all(|(i, &v)| v as usize == i)
    }

    pub fn is_delta(&self) -> bool {
        let n = self.n();
        self.images().iter().enumerate().all(|(i, &v)| v as usize == n - 1 - i)
    }

    pub fn inverse_perm(&self) -> [u8; MAX_STRANDS] {
        let mut inv = [0u8; MAX_STRANDS];
        for i in 0..self.n() {
            inv[self.img[i] as usize] = i as u8;
        }
        inv
    }

    /// Generators σ_i that can be pulled off the front, as a bitmask (bit `i-1` for σ_i).
    #[inline]
    pub fn starting_set(&self) -> u16 {
        let mut s = 0u16;
        for i in 0..self.n().saturating_sub(1) {
            if self.img[i] > self.img[i + 1] {
                s |= 1 << i;
            }
        }
        s
    }

    /// Generators σ_i that can be pulled off the back, as a bitmask.
    #[inline]
    pub fn finishing_set(&self) -> u16 {
        let inv = self.inverse_perm();
        let mut s = 0u16;
        for i in 0..self.n().saturating_sub(1) {
            if inv[i] > inv[i + 1] {
                s |= 1 << i;
            }
        }
        s
    }

    /// Number of crossings, which equals the exponent sum of the factor.
    pub fn crossings(&self) -> u32 {
        let img = self.images();
        let mut c = 0;
        for i in 0..img.len() {
            for j in i + 1..img.len() {
                if img[i] > img[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// `self · σ_{bit+1}`; the caller guarantees the bit is not in the finishing set.
    #[inline]
    pub(crate) fn push_back(&mut self, bit: usize) {
        let (a, b) = (bit as u8, bit as u8 + 1);
        for v in self.img[..self.n as usize].iter_mut() {
            if *v == a {
                *v = b;
            } else if *v == b {
                *v = a;
            }
        }
    }

    /// `σ_{bit+1}^{-1} · self`; the caller guarantees the bit is in the starting set.
    #[inline]
    pub(crate) fn pop_front(&mut self, bit: usize) {
        self.img.swap(bit, bit + 1);
    }

    /// τ(A) = Δ⁻¹·A·Δ.
    pub fn tau(&self) -> Self {
        let n = self.n();
        let mut f = *self;
        for i in 0..n {
            f.img[i] = (n - 1) as u8 - self.img[n - 1 - i];
        }
        f
    }

    /// τ^k; τ is an involution on simple elements.
    #[inline]
    pub fn tau_pow(&self, k: i64) -> Self {
        if k.rem_euclid(2) == 1 {
            self.tau()
        } else {
            *self
        }
    }

    /// The simple element `A⁻¹·Δ`.
    pub fn right_complement(&self) -> Self {
        let n = self.n();
        let inv = self.inverse_perm();
        let mut f = *self;
        for j in 0..n {
            f.img[j] = (n - 1) as u8 - inv[j];
        }
        f
    }

    /// The simple element `Δ·A⁻¹`.
    pub fn left_complement(&self) -> Self {
        let n = self.n();
        let inv = self.inverse_perm();
        let mut f = *self;
        for i in 0..n {
            f.img[i] = inv[n - 1 - i];
        }
        f
    }

    /// A positive word for this factor, as 1-based generator indices.
    pub fn to_generators(&self) -> Vec<usize> {
        let mut rest = *self;
        let mut out = Vec::with_capacity(self.crossings() as usize);
        loop {
            let s = rest.starting_set();
            if s == 0 {
                break;
            }
            let bit = s.trailing_zeros() as usize;
            out.push(bit + 1);
            rest.pop_front(bit);
        }
        out
    }

    /// Every simple element of B_n in lexicographic order of the image sequence.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (0..n as u8).collect();
        loop {
            out.push(Self::from_images(&cur).expect("permutation"));
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("successor");
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

/// Makes the pair `(a, b)` left-weighted by moving crossings from the front of `b`
/// to the back of `a`. Returns whether anything moved.
#[inline]
pub(crate) fn left_weight(a: &mut PermutationFactor, b: &mut PermutationFactor) -> bool {
    let mut changed = false;
    loop {
        let movable = b.starting_set() & !a.finishing_set();
        if movable == 0 {
            return changed;
        }
        let bit = movable.trailing_zeros() as usize;
        a.push_back(bit);
        b.pop_front(bit);
        changed = true;
    }
}

impl fmt::Debug for PermutationFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "]")
    }
}
