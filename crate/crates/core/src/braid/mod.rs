//! Exact arithmetic in the braid group B_n.
//!
//! Words are kept as raw letter sequences. Canonicalization happens only when
//! [`BraidWord::normal_form`] is called, which produces the Garside left normal form
//! over permutation-braid factors.

mod factor;
mod normal_form;
mod word;

use rand::Rng;

pub use factor::{PermutationFactor, MAX_STRANDS};
pub use normal_form::{DecodeError, NormalForm, NF_MAGIC, NF_VERSION};
pub use word::{BraidWord, Letter};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum BraidError {
    #[error("braid index mismatch: {0} vs {1}")]
    IndexMismatch(usize, usize),
    #[error("generator σ_{index} out of range for B_{n}")]
    GeneratorOutOfRange { index: usize, n: usize },
    #[error("unsupported braid index {0} (need 2..={MAX_STRANDS})")]
    BadBraidIndex(usize),
    #[error("invalid group parameters l={l}, r={r}: both must be at least 2 and l+r at most {MAX_STRANDS}")]
    InvalidParams { l: usize, r: usize },
    #[error("element does not lie in the {0:?} subgroup")]
    NotInSubgroup(Subgroup),
}

/// The split B_{l+r} ⊃ LB_l × RB_r.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupParams {
    l: usize,
    r: usize,
}

impl GroupParams {
    pub fn new(l: usize, r: usize) -> Result<Self, BraidError> {
        if l < 2 || r < 2 || l + r > MAX_STRANDS {
            return Err(BraidError::InvalidParams { l, r });
        }
        Ok(GroupParams { l, r })
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.l + self.r
    }

    /// 1-based generator indices of a subgroup. σ_l belongs to neither side.
    pub fn generators(&self, subgroup: Subgroup) -> std::ops::Range<usize> {
        match subgroup {
            Subgroup::Full => 1..self.n(),
            Subgroup::Left => 1..self.l,
            Subgroup::Right => self.l + 1..self.n(),
        }
    }

    pub fn contains_word(&self, subgroup: Subgroup, w: &BraidWord) -> bool {
        let gens = self.generators(subgroup);
        w.n() == self.n() && w.letters().iter().all(|l| gens.contains(&(l.index as usize)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Subgroup {
    Full,
    Left,
    Right,
}

/// The positive half twist of B_n as a word: (σ_1⋯σ_{n-1})(σ_1⋯σ_{n-2})⋯(σ_1).
pub fn delta(n: usize) -> Result<BraidWord, BraidError> {
    if !(2..=MAX_STRANDS).contains(&n) {
        return Err(BraidError::BadBraidIndex(n));
    }
    let letters = (1..n).rev().flat_map(|top| (1..=top).map(Letter::pos)).collect();
    BraidWord::new(n, letters)
}

/// `length` i.i.d. letters, uniform over (generator of `subgroup`, sign).
pub fn random_braid<R: Rng + ?Sized>(
    params: &GroupParams,
    subgroup: Subgroup,
    length: usize,
    rng: &mut R,
) -> Result<BraidWord, BraidError> {
    let gens = params.generators(subgroup);
    if gens.is_empty() {
        return Err(BraidError::InvalidParams { l: params.l, r: params.r });
    }
    let choices = 2 * gens.len() as u32;
    let letters = (0..length)
        .map(|_| {
            let v = rng.gen_range(0..choices) as usize;
            let index = gens.start + v / 2;
            if v % 2 == 0 {
                Letter::pos(index)
            } else {
                Letter::neg(index)
            }
        })
        .collect();
    BraidWord::new(params.n(), letters)
}

/// Like [`random_braid`], but never places a letter next to its own inverse, so the
/// word is freely reduced. Each letter after the first is uniform over the
/// `2g - 1` letters that do not cancel its predecessor.
pub fn random_reduced_braid<R: Rng + ?Sized>(
    params: &GroupParams,
    subgroup: Subgroup,
    length: usize,
    rng: &mut R,
) -> Result<BraidWord, BraidError> {
    let gens = params.generators(subgroup);
    if gens.is_empty() {
        return Err(BraidError::InvalidParams { l: params.l, r: params.r });
    }
    let choices = 2 * gens.len() as u32;
    let letter = |v: u32| {
        let index = gens.start + v as usize / 2;
        if v % 2 == 0 {
            Letter::pos(index)
        } else {
            Letter::neg(index)
        }
    };
    let mut letters: Vec<Letter> = Vec::with_capacity(length);
    let mut prev: Option<u32> = None;
    for _ in 0..length {
        let v = match prev {
            None => rng.gen_range(0..choices),
            Some(p) => {
                let forbidden = p ^ 1;
                let v = rng.gen_range(0..choices - 1);
                if v >= forbidden {
                    v + 1
                } else {
                    v
                }
            }
        };
        letters.push(letter(v));
        prev = Some(v);
    }
    BraidWord::new(params.n(), letters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn w(n: usize, s: &[i32]) -> BraidWord {
        BraidWord::from_signed(n, s).unwrap()
    }

    #[test]
    fn braid_relations_hold() {
        assert!(w(3, &[1, 2, 1]).equals(&w(3, &[2, 1, 2])).unwrap());
        assert!(w(4, &[1, 3]).equals(&w(4, &[3, 1])).unwrap());
        assert!(!w(3, &[1]).equals(&w(3, &[2])).unwrap());
        assert!(w(3, &[1, -1]).normal_form().is_identity());
    }

    #[test]
    fn mismatched_index_is_an_error() {
        assert_eq!(w(3, &[1]).multiply(&w(4, &[1])), Err(BraidError::IndexMismatch(3, 4)));
        assert!(w(3, &[1]).equals(&w(4, &[1])).is_err());
        assert!(BraidWord::from_signed(3, &[3]).is_err());
        assert!(BraidWord::from_signed(3, &[0]).is_err());
    }

    #[test]
    fn normal_form_examples() {
        let e = BraidWord::identity(4).normal_form();
        assert_eq!((e.inf(), e.canonical_length()), (0, 0));
        let d = w(3, &[1, 2, 1]).normal_form();
        assert_eq!((d.inf(), d.canonical_length()), (1, 0));
        let s = w(3, &[2, 1]).normal_form();
        assert_eq!((s.inf(), s.canonical_length()), (0, 1));
    }

    #[test]
    fn inverse_of_sigma1_in_b3() {
        let inv = w(3, &[1]).inverse();
        assert_eq!(inv, w(3, &[-1]));
        let nf = inv.normal_form();
        assert_eq!(nf.inf(), -1);
        assert_eq!(nf.canonical_length(), 1);
        // Δ⁻¹·(Δσ_1⁻¹) multiplied back by σ_1 is the identity
        assert!(nf.mul(&w(3, &[1]).normal_form()).is_identity());
        assert!(BraidWord::identity(3).inverse().is_empty());
    }

    #[test]
    fn delta_words() {
        assert_eq!(delta(2).unwrap(), w(2, &[1]));
        assert_eq!(delta(3).unwrap(), w(3, &[1, 2, 1]));
        assert_eq!(delta(4).unwrap().permutation(), vec![3, 2, 1, 0]);
        assert!(delta(1).is_err());
        assert!(delta(6).unwrap().normal_form() == NormalForm::delta_power(6, 1));
    }

    #[test]
    fn tau_examples() {
        assert!(BraidWord::identity(4).tau().is_empty());
        let d = delta(4).unwrap();
        let lhs = d.inverse().multiply(&w(4, &[1])).unwrap().multiply(&d).unwrap();
        assert!(lhs.equals(&w(4, &[3])).unwrap());
        assert_eq!(w(4, &[1]).tau(), w(4, &[3]));
    }

    #[test]
    fn random_braid_respects_subgroup_and_seed() {
        let p = GroupParams::new(3, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        assert!(random_braid(&p, Subgroup::Left, 0, &mut rng).unwrap().is_empty());
        let left = random_braid(&p, Subgroup::Left, 200, &mut rng).unwrap();
        assert!(left.letters().iter().all(|l| (1..=2).contains(&l.index)));
        let right = random_braid(&p, Subgroup::Right, 200, &mut rng).unwrap();
        assert!(right.letters().iter().all(|l| (4..=5).contains(&l.index)));
        let a = random_braid(&p, Subgroup::Full, 30, &mut ChaCha8Rng::seed_from_u64(1)).unwrap();
        let b = random_braid(&p, Subgroup::Full, 30, &mut ChaCha8Rng::seed_from_u64(1)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn reduced_sampling_never_cancels() {
        let p = GroupParams::new(3, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for sub in [Subgroup::Full, Subgroup::Left, Subgroup::Right] {
            let w = random_reduced_braid(&p, sub, 500, &mut rng).unwrap();
            assert_eq!(w.len(), 500);
            assert!(p.contains_word(sub, &w));
            assert!(w.letters().windows(2).all(|x| x[1] != x[0].inverse()));
        }
    }

    #[test]
    fn group_params_validation() {
        assert!(GroupParams::new(1, 3).is_err());
        assert!(GroupParams::new(3, 1).is_err());
        let p = GroupParams::new(3, 4).unwrap();
        assert_eq!(p.n(), 7);
        assert_eq!(p.generators(Subgroup::Left), 1..3);
        assert_eq!(p.generators(Subgroup::Right), 4..7);
    }
}
