//! Fixtures shared by the integration tests.
#![allow(dead_code)]

pub mod matrix;

use braidsig::braid::{random_braid, random_reduced_braid, BraidWord, GroupParams, NormalForm, Subgroup};
use braidsig::schemes::{self, KeyPair, ProxyKey, SchemeParams, Warrant};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn nf(n: usize, signed: &[i32]) -> NormalForm {
    BraidWord::from_signed(n, signed).unwrap().normal_form()
}

pub fn sigma1(n: usize) -> NormalForm {
    nf(n, &[1])
}

/// A random signed word in B_n of `len` letters, as signed indices.
pub fn random_signed(n: usize, len: usize, rng: &mut impl Rng) -> Vec<i32> {
    (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect()
}

/// A word equal to the identity: a free cancellation, a braid relation written as
/// a relator, or a far commutator.
pub fn trivial_word(n: usize, rng: &mut impl Rng) -> Vec<i32> {
    let i = rng.gen_range(1..n as i32);
    let s = if rng.gen_bool(0.5) { 1 } else { -1 };
    match rng.gen_range(0..3) {
        0 => vec![s * i, -s * i],
        1 if n >= 3 => {
            let i = rng.gen_range(1..n as i32 - 1);
            let j = i + 1;
            // σ_i σ_j σ_i (σ_j σ_i σ_j)⁻¹, possibly inverted
            let w = vec![i, j, i, -j, -i, -j];
            if s > 0 {
                w
            } else {
                w.iter().rev().map(|x| -x).collect()
            }
        }
        _ if n >= 4 => {
            let i = rng.gen_range(1..n as i32 - 2);
            let j = rng.gen_range(i + 2..n as i32);
            vec![s * i, j, -s * i, -j]
        }
        _ => vec![i, -i],
    }
}

/// Inserts `count` trivial words at random positions.
pub fn perturb(word: &[i32], n: usize, count: usize, rng: &mut impl Rng) -> Vec<i32> {
    let mut w = word.to_vec();
    for _ in 0..count {
        let at = rng.gen_range(0..=w.len());
        let t = trivial_word(n, rng);
        w.splice(at..at, t);
    }
    w
}

pub fn cycle_type(perm: &[u8]) -> Vec<usize> {
    let mut seen = vec![false; perm.len()];
    let mut lens = Vec::new();
    for start in 0..perm.len() {
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i] as usize;
            len += 1;
        }
        if len > 0 {
            lens.push(len);
        }
    }
    lens.sort_unstable();
    lens
}

/// Every party and artifact of one honest run, all derived from `seed`.
pub struct World {
    pub sp: SchemeParams,
    pub alice: KeyPair,
    pub bob: KeyPair,
    pub cindy: KeyPair,
    pub trevor: KeyPair,
    pub pkey: ProxyKey,
    pub b: BraidWord,
    pub now: u64,
}

impl World {
    pub fn new(sp: SchemeParams, seed: u64) -> World {
        let mut rng = rng(seed);
        let alice = schemes::keygen(&sp, &mut rng).unwrap();
        let bob = schemes::keygen(&sp, &mut rng).unwrap();
        let cindy = schemes::keygen(&sp, &mut rng).unwrap();
        let trevor = schemes::keygen(&sp, &mut rng).unwrap();
        let w = Warrant::new("alice", "bob", 1_000, 2_000, format!("transfer #{seed}")).unwrap();
        let d = schemes::delegate(&alice, w, &sp, &mut rng).unwrap();
        let (pkey, _) = schemes::accept_delegation(&bob, &d, alice.public(), &sp.caps).unwrap();
        let b = random_reduced_braid(&sp.group, Subgroup::Left, sp.ephemeral_length, &mut rng).unwrap();
        World { sp, alice, bob, cindy, trevor, pkey, b, now: 1_500 }
    }

    pub fn message(&self) -> Vec<u8> {
        b"meet at noon".to_vec()
    }
}

pub fn random_nf(params: &GroupParams, rng: &mut impl Rng) -> NormalForm {
    let len = rng.gen_range(0..24);
    random_braid(params, Subgroup::Full, len, rng).unwrap().normal_form()
}

pub fn random_bytes(rng: &mut impl Rng, max: usize) -> Vec<u8> {
    let len = rng.gen_range(0..=max);
    (0..len).map(|_| rng.gen()).collect()
}

pub fn random_warrant(rng: &mut impl Rng) -> Warrant {
    let a: u64 = rng.gen();
    let b: u64 = rng.gen();
    Warrant::new(random_bytes(rng, 12), random_bytes(rng, 12), a.min(b), a.max(b), random_bytes(rng, 40)).unwrap()
}

/// Flips one bit of a byte string (appending a byte when it is empty).
pub fn flip(bytes: &[u8], bit: usize) -> Vec<u8> {
    let mut v = bytes.to_vec();
    if v.is_empty() {
        v.push(1);
    } else {
        let i = (bit / 8) % v.len();
        v[i] ^= 1 << (bit % 8);
    }
    v
}

/// One single-bit flip per warrant field.
pub fn warrant_flips(w: &Warrant) -> Vec<(&'static str, Warrant)> {
    let mut out = Vec::new();
    let mut t = w.clone();
    t.original_id = flip(&w.original_id, 0);
    out.push(("warrant.original_id bit", t));
    let mut t = w.clone();
    t.proxy_id = flip(&w.proxy_id, 3);
    out.push(("warrant.proxy_id bit", t));
    let mut t = w.clone();
    t.valid_from ^= 1;
    out.push(("warrant.valid_from bit", t));
    let mut t = w.clone();
    t.valid_to ^= 1 << 4;
    out.push(("warrant.valid_to bit", t));
    let mut t = w.clone();
    t.message_scope = flip(&w.message_scope, 9);
    out.push(("warrant.message_scope bit", t));
    out
}

/// A pair of short words in B_3 or B_4: a cyclic rotation (always conjugate), an
/// independent word with the same exponent sum, or an unrelated word.
pub fn oracle_pair(rng: &mut impl Rng) -> (NormalForm, NormalForm) {
    let n = if rng.gen_bool(0.5) { 3 } else { 4 };
    let len = rng.gen_range(1..=5);
    let x = random_signed(n, len, rng);
    let y = match rng.gen_range(0..3) {
        0 => {
            let k = rng.gen_range(0..len);
            [&x[k..], &x[..k]].concat()
        }
        1 => {
            let mut y = random_signed(n, len, rng);
            fix_exponent_sum(&mut y, x.iter().map(|v| v.signum()).sum());
            y
        }
        _ => random_signed(n, rng.gen_range(1..=5), rng),
    };
    (nf(n, &x), nf(n, &y))
}

/// Flips signs until the exponent sum is `want` (reachable because lengths match).
fn fix_exponent_sum(y: &mut [i32], want: i32) {
    for i in 0..y.len() {
        let have: i32 = y.iter().map(|v| v.signum()).sum();
        if have == want {
            return;
        }
        if (have > want) == (y[i] > 0) {
            y[i] = -y[i];
        }
    }
}

pub enum OracleResult {
    /// Both sides decided and agree; `true` means conjugate.
    Agree(bool),
    /// Brute force found nothing and no invariant separates the pair.
    Inconclusive,
    Disagree(String),
}

/// Compares `is_conjugate` with bounded brute force (plus the exponent-sum and
/// permutation-cycle-type invariants for negative answers).
pub fn oracle_check(x: &NormalForm, y: &NormalForm, max_len: usize) -> OracleResult {
    use braidsig::conjugacy::{brute_force_csp, is_conjugate, ConjugacyCaps, SearchSpace, Verdict};
    let n = x.n();
    let d = is_conjugate(x, y, &ConjugacyCaps::default()).unwrap();
    if let Some(c) = &d.witness {
        if &x.conjugate_by(&c.normal_form()) != y {
            return OracleResult::Disagree(format!("witness {c} does not conjugate"));
        }
    }
    let brute = brute_force_csp(x, y, SearchSpace::Full(n), max_len);
    let perm = |z: &NormalForm| cycle_type(&z.to_word().permutation());
    let separated = x.exponent_sum() != y.exponent_sum() || perm(x) != perm(y);
    match (d.verdict, brute) {
        (Verdict::Conjugate, Some(_)) => OracleResult::Agree(true),
        (Verdict::NotConjugate, None) if separated => OracleResult::Agree(false),
        (Verdict::Conjugate, None) if !separated => OracleResult::Inconclusive,
        (Verdict::NotConjugate, None) => OracleResult::Inconclusive,
        (v, b) => OracleResult::Disagree(format!("is_conjugate {v:?}, brute force {b:?}, separated {separated}")),
    }
}

/// Encodes and decodes `count` random values of every envelope type and returns the
/// number of values that came back different (by value or by re-encoded bytes).
pub fn codec_round_trips(count: u64, seed: u64) -> Vec<(&'static str, usize)> {
    use braidsig::codec::{decode, encode, Encodable};
    use braidsig::preset::{TOY_6, TOY_8};
    use braidsig::schemes::*;

    fn check<T: Encodable + PartialEq>(v: &T, p: GroupParams) -> bool {
        let bytes = encode(v, p);
        match decode::<T>(&bytes) {
            Ok((back, params)) => &back == v && params == p && encode(&back, p) == bytes,
            Err(_) => false,
        }
    }

    let mut bad = vec![
        ("KeyPair", 0),
        ("PublicKey", 0),
        ("Delegation", 0),
        ("ProxyKey", 0),
        ("ProxySignature", 0),
        ("DvsSignature", 0),
        ("BiDvsSignature", 0),
        ("DvpsSignature", 0),
        ("BiDvpsSignature", 0),
    ];
    let mut g = rng(seed);
    for i in 0..count {
        let preset = if i % 4 == 3 { TOY_8 } else { TOY_6 };
        let sp = preset.scheme_params();
        let p = sp.group;
        let x = |g: &mut ChaCha8Rng| random_nf(&p, g);
        let recipient = |g: &mut ChaCha8Rng| if g.gen_bool(0.5) { Recipient::First } else { Recipient::Second };
        let kp = keygen(&sp, &mut g).unwrap();
        let d = Delegation { warrant: random_warrant(&mut g), z_o: x(&mut g), t_o: x(&mut g) };
        let results = [
            check(&kp, p),
            check(kp.public(), p),
            check(&d, p),
            check(&ProxyKey { pk: x(&mut g), delegation: d.clone() }, p),
            check(
                &ProxySignature {
                    gamma: x(&mut g),
                    delta: x(&mut g),
                    theta: x(&mut g),
                    t_o: x(&mut g),
                    warrant: random_warrant(&mut g),
                },
                p,
            ),
            check(&DvsSignature { message: random_bytes(&mut g, 64), alpha: x(&mut g), delta: x(&mut g) }, p),
            check(
                &BiDvsSignature {
                    recipient: recipient(&mut g),
                    message: random_bytes(&mut g, 64),
                    alpha_own: x(&mut g),
                    beta_other: x(&mut g),
                    delta: x(&mut g),
                },
                p,
            ),
            check(
                &DvpsSignature {
                    warrant: random_warrant(&mut g),
                    alpha: x(&mut g),
                    gamma: x(&mut g),
                    delta: x(&mut g),
                    theta: x(&mut g),
                    t_o: x(&mut g),
                },
                p,
            ),
            check(
                &BiDvpsSignature {
                    recipient: recipient(&mut g),
                    message: random_bytes(&mut g, 64),
                    alpha_own: x(&mut g),
                    beta_other: x(&mut g),
                    gamma: x(&mut g),
                    delta: x(&mut g),
                    theta: x(&mut g),
                    t_o: x(&mut g),
                    warrant: random_warrant(&mut g),
                },
                p,
            ),
        ];
        for (slot, ok) in bad.iter_mut().zip(results) {
            slot.1 += usize::from(!ok);
        }
    }
    bad
}
