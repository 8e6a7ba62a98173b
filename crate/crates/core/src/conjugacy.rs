//! Conjugacy machinery: cycling, decycling, summit representatives, super summit
//! sets, and the conjugacy decision every verifier relies on. A breadth-first
//! conjugator search is provided as an attack and test oracle.
//!
//! Conjugators follow one convention throughout: a conjugator `c` for `x ↦ y`
//! satisfies `c · x · c⁻¹ = y`.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::braid::{BraidError, BraidWord, GroupParams, Letter, NormalForm, PermutationFactor, Subgroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConjugacyCaps {
    /// Largest super summit set enumerated before giving up.
    pub sss_cap: usize,
    /// Largest number of cycling plus decycling steps per summit computation.
    pub cycling_cap: usize,
}

impl Default for ConjugacyCaps {
    fn default() -> Self {
        ConjugacyCaps { sss_cap: 20_000, cycling_cap: 10_000 }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct WorkCounters {
    pub elements_enumerated: u64,
    pub cyclings: u64,
    pub decyclings: u64,
    pub simple_conjugations: u64,
    pub cap_hit: bool,
}

impl WorkCounters {
    pub fn absorb(&mut self, other: &WorkCounters) {
        self.elements_enumerated += other.elements_enumerated;
        self.cyclings += other.cyclings;
        self.decyclings += other.decyclings;
        self.simple_conjugations += other.simple_conjugations;
        self.cap_hit |= other.cap_hit;
    }

    /// `key=value` lines for `--stats`.
    pub fn to_kv_lines(&self) -> String {
        format!(
            "elements_enumerated={}\ncyclings={}\ndecyclings={}\nsimple_conjugations={}\ncap_hit={}\n",
            self.elements_enumerated, self.cyclings, self.decyclings, self.simple_conjugations, self.cap_hit
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Conjugate,
    NotConjugate,
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct ConjugacyDecision {
    pub verdict: Verdict,
    /// Present iff the verdict is `Conjugate`; satisfies `c·a·c⁻¹ = b`.
    pub witness: Option<BraidWord>,
    pub work: WorkCounters,
}

/// One cycling step. Returns the conjugate and `c` with `c·x·c⁻¹` equal to it.
pub fn cycling(x: &NormalForm) -> (NormalForm, BraidWord) {
    match cycle_factor(x) {
        None => (x.clone(), BraidWord::identity(x.n())),
        Some(s) => (x.conjugate_by_simple(&s), NormalForm::from_factor(s).inverse().to_word()),
    }
}

/// One decycling step, with the same witness convention as [`cycling`].
pub fn decycling(x: &NormalForm) -> (NormalForm, BraidWord) {
    match decycle_factor(x) {
        None => (x.clone(), BraidWord::identity(x.n())),
        Some(a) => {
            let c = NormalForm::from_factor(a);
            (x.conjugate_by(&c), c.to_word())
        }
    }
}

/// The simple `s` with cycling(x) = s⁻¹·x·s, namely τ^{-inf}(A_1).
fn cycle_factor(x: &NormalForm) -> Option<PermutationFactor> {
    x.factors().first().map(|a| a.tau_pow(-x.inf()))
}

/// The simple `A_k` with decycling(x) = A_k·x·A_k⁻¹.
fn decycle_factor(x: &NormalForm) -> Option<PermutationFactor> {
    x.factors().last().copied()
}

#[derive(Clone, Debug)]
pub struct SummitData {
    /// An element of the super summit set of the input's conjugacy class.
    pub representative: NormalForm,
    /// `conjugator · x · conjugator⁻¹ = representative`.
    pub conjugator: NormalForm,
    pub sss: Option<SuperSummitSet>,
    pub work: WorkCounters,
}

impl SummitData {
    pub fn conjugator_word(&self) -> BraidWord {
        self.conjugator.to_word()
    }

    /// Whether the representative really attains the summit (no cap was hit on the way).
    pub fn is_complete(&self) -> bool {
        !self.work.cap_hit
    }
}

/// A super summit set, stored as a spanning tree of simple conjugations from its root.
#[derive(Clone, Debug)]
pub struct SuperSummitSet {
    members: Vec<NormalForm>,
    parent: Vec<Option<(usize, PermutationFactor)>>,
    pub truncated: bool,
}

impl SuperSummitSet {
    pub fn members(&self) -> &[NormalForm] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: &NormalForm) -> bool {
        self.members.contains(x)
    }

    /// `d` with `d · root · d⁻¹ = members[i]`.
    pub fn conjugator_from_root(&self, i: usize) -> NormalForm {
        let n = self.members[i].n();
        let mut d = NormalForm::identity(n);
        let mut cur = i;
        // members[i] = s⁻¹·members[p]·s, so d_i = s⁻¹·d_p
        let mut chain = Vec::new();
        while let Some((p, s)) = self.parent[cur] {
            chain.push(s);
            cur = p;
        }
        for s in chain.iter().rev() {
            d = NormalForm::from_factor(*s).inverse().mul(&d);
        }
        d
    }
}

/// Cycles until inf stabilizes, then decycles until sup stabilizes.
pub fn summit_representative(x: &NormalForm, caps: &ConjugacyCaps) -> SummitData {
    let n = x.n();
    // If inf is not maximal, it rises within ‖Δ‖ cycling steps (dually for sup).
    let patience = n * (n - 1) / 2;
    let mut work = WorkCounters::default();
    let mut y = x.clone();
    let mut conj = NormalForm::identity(n);
    let mut steps = 0usize;

    let mut stall = 0;
    while stall < patience && y.canonical_length() > 0 {
        if steps >= caps.cycling_cap {
            work.cap_hit = true;
            break;
        }
        let s = cycle_factor(&y).expect("nonempty");
        let next = y.conjugate_by_simple(&s);
        conj = NormalForm::from_factor(s).inverse().mul(&conj);
        work.cyclings += 1;
        steps += 1;
        stall = if next.inf() > y.inf() { 0 } else { stall + 1 };
        y = next;
    }

    let mut stall = 0;
    while stall < patience && y.canonical_length() > 0 && !work.cap_hit {
        if steps >= caps.cycling_cap {
            work.cap_hit = true;
            break;
        }
        let a = NormalForm::from_factor(decycle_factor(&y).expect("nonempty"));
        let next = y.conjugate_by(&a);
        conj = a.mul(&conj);
        work.decyclings += 1;
        steps += 1;
        stall = if next.sup() < y.sup() { 0 } else { stall + 1 };
        y = next;
    }

    SummitData { representative: y, conjugator: conj, sss: None, work }
}

/// Enumerates the super summit set of `x`, stopping early if `stop` returns true for a member.
fn enumerate_sss(
    root: &NormalForm,
    cap: usize,
    work: &mut WorkCounters,
    mut stop: impl FnMut(&NormalForm) -> bool,
) -> (SuperSummitSet, Option<usize>) {
    let simples: Vec<PermutationFactor> =
        PermutationFactor::all(root.n()).into_iter().filter(|s| !s.is_identity()).collect();
    let (inf, sup) = (root.inf(), root.sup());
    let mut set = SuperSummitSet { members: vec![root.clone()], parent: vec![None], truncated: false };
    let mut seen: HashSet<NormalForm> = HashSet::from([root.clone()]);
    work.elements_enumerated += 1;
    if stop(root) {
        return (set, Some(0));
    }
    let mut next = 0;
    while next < set.members.len() {
        let current = set.members[next].clone();
        for s in &simples {
            let y = current.conjugate_by_simple(s);
            work.simple_conjugations += 1;
            if y.inf() != inf || y.sup() != sup || seen.contains(&y) {
                continue;
            }
            if set.members.len() >= cap {
                set.truncated = true;
                work.cap_hit = true;
                return (set, None);
            }
            seen.insert(y.clone());
            set.members.push(y);
            set.parent.push(Some((next, *s)));
            work.elements_enumerated += 1;
            let idx = set.members.len() - 1;
            if stop(&set.members[idx]) {
                return (set, Some(idx));
            }
        }
        next += 1;
    }
    (set, None)
}

/// The super summit set of `x`'s conjugacy class, each member reachable from the
/// summit representative by simple conjugations. Truncated at `cap` members.
pub fn super_summit_set(x: &NormalForm, cap: usize, caps: &ConjugacyCaps) -> SummitData {
    let mut data = summit_representative(x, caps);
    if data.work.cap_hit {
        return data;
    }
    let (sss, _) = enumerate_sss(&data.representative, cap, &mut data.work, |_| false);
    data.sss = Some(sss);
    data
}

/// Decides whether `a` and `b` are conjugate.
///
/// Cheap invariants (exponent sum, summit `inf`/`sup`) reject first. Both summit
/// representatives are then cycled into their periodic cycling orbits, and the part
/// of the super summit set made of cycling-periodic elements is searched from one
/// side for the other. That subset is an invariant of the conjugacy class, is
/// connected under conjugation by simple elements, and is far smaller than the
/// whole super summit set, so `caps.sss_cap` bounds it instead.
pub fn is_conjugate(
    a: &NormalForm,
    b: &NormalForm,
    caps: &ConjugacyCaps,
) -> Result<ConjugacyDecision, BraidError> {
    if a.n() != b.n() {
        return Err(BraidError::IndexMismatch(a.n(), b.n()));
    }
    let n = a.n();
    let mut work = WorkCounters::default();
    let decided = |verdict, witness: Option<NormalForm>, work| ConjugacyDecision {
        verdict,
        witness: witness.map(|w| w.to_word()),
        work,
    };
    if a == b {
        return Ok(decided(Verdict::Conjugate, Some(NormalForm::identity(n)), work));
    }
    if a.exponent_sum() != b.exponent_sum() {
        return Ok(decided(Verdict::NotConjugate, None, work));
    }
    let sa = summit_representative(a, caps);
    let sb = summit_representative(b, caps);
    work.absorb(&sa.work);
    work.absorb(&sb.work);
    if work.cap_hit {
        return Ok(decided(Verdict::Inconclusive, None, work));
    }
    let (ya, yb) = (&sa.representative, &sb.representative);
    if (ya.inf(), ya.sup()) != (yb.inf(), yb.sup()) {
        return Ok(decided(Verdict::NotConjugate, None, work));
    }
    let (Some((ua, ca)), Some((ub, cb))) =
        (periodic_point(ya, caps, &mut work), periodic_point(yb, caps, &mut work))
    else {
        return Ok(decided(Verdict::Inconclusive, None, work));
    };
    // c·a·c⁻¹ = b with c = (cb·sb)⁻¹·d·(ca·sa), where d·ua·d⁻¹ = ub
    let into_a = ca.mul(&sa.conjugator);
    let into_b = cb.mul(&sb.conjugator);
    let finish = |d: NormalForm| into_b.inverse().mul(&d).mul(&into_a);
    if ua == ub {
        return Ok(decided(Verdict::Conjugate, Some(finish(NormalForm::identity(n))), work));
    }
    match enumerate_periodic(&ua, caps, &mut work, |m| m == &ub) {
        Search::Found(set, i) => {
            let d = set.conjugator_from_root(i);
            Ok(decided(Verdict::Conjugate, Some(finish(d)), work))
        }
        Search::Exhausted => Ok(decided(Verdict::NotConjugate, None, work)),
        Search::Capped => Ok(decided(Verdict::Inconclusive, None, work)),
    }
}

/// Follows the cycling orbit of a summit element until it repeats. The first repeated
/// element is periodic under cycling; returns it with `c` such that `c·y·c⁻¹` equals it.
fn periodic_point(
    y: &NormalForm,
    caps: &ConjugacyCaps,
    work: &mut WorkCounters,
) -> Option<(NormalForm, NormalForm)> {
    let mut seen: HashMap<NormalForm, usize> = HashMap::new();
    let mut conjugators = vec![NormalForm::identity(y.n())];
    let mut cur = y.clone();
    loop {
        if let Some(&i) = seen.get(&cur) {
            return Some((cur, conjugators.swap_remove(i)));
        }
        if seen.len() >= caps.cycling_cap {
            work.cap_hit = true;
            return None;
        }
        seen.insert(cur.clone(), seen.len());
        let Some(s) = cycle_factor(&cur) else {
            return Some((cur, conjugators.pop().expect("nonempty")));
        };
        let next = cur.conjugate_by_simple(&s);
        let c = NormalForm::from_factor(s).inverse().mul(conjugators.last().expect("nonempty"));
        conjugators.push(c);
        work.cyclings += 1;
        cur = next;
    }
}

/// Whether a summit element returns to itself under repeated cycling.
fn is_periodic(
    y: &NormalForm,
    caps: &ConjugacyCaps,
    work: &mut WorkCounters,
    known_transient: &mut HashSet<NormalForm>,
) -> Option<bool> {
    let mut cur = y.clone();
    let mut path: HashSet<NormalForm> = HashSet::new();
    loop {
        let Some(s) = cycle_factor(&cur) else {
            return Some(true);
        };
        cur = cur.conjugate_by_simple(&s);
        work.cyclings += 1;
        if &cur == y {
            return Some(true);
        }
        // The orbit of a periodic element contains only periodic elements.
        if known_transient.contains(&cur) || !path.insert(cur.clone()) {
            known_transient.insert(y.clone());
            return Some(false);
        }
        if path.len() >= caps.cycling_cap {
            work.cap_hit = true;
            return None;
        }
    }
}

enum Search {
    Found(SuperSummitSet, usize),
    Exhausted,
    Capped,
}

/// Breadth-first closure of a cycling-periodic summit element under simple
/// conjugations, keeping only cycling-periodic summit elements.
fn enumerate_periodic(
    root: &NormalForm,
    caps: &ConjugacyCaps,
    work: &mut WorkCounters,
    mut stop: impl FnMut(&NormalForm) -> bool,
) -> Search {
    let simples: Vec<PermutationFactor> =
        PermutationFactor::all(root.n()).into_iter().filter(|s| !s.is_identity()).collect();
    let (inf, sup) = (root.inf(), root.sup());
    let mut set = SuperSummitSet { members: vec![root.clone()], parent: vec![None], truncated: false };
    let mut seen: HashSet<NormalForm> = HashSet::from([root.clone()]);
    let mut transient: HashSet<NormalForm> = HashSet::new();
    work.elements_enumerated += 1;
    let mut next = 0;
    while next < set.members.len() {
        let current = set.members[next].clone();
        for s in &simples {
            let y = current.conjugate_by_simple(s);
            work.simple_conjugations += 1;
            if y.inf() != inf || y.sup() != sup || seen.contains(&y) || transient.contains(&y) {
                continue;
            }
            match is_periodic(&y, caps, work, &mut transient) {
                None => return Search::Capped,
                Some(false) => continue,
                Some(true) => {}
            }
            if set.members.len() >= caps.sss_cap {
                work.cap_hit = true;
                return Search::Capped;
            }
            seen.insert(y.clone());
            set.members.push(y);
            set.parent.push(Some((next, *s)));
            work.elements_enumerated += 1;
            let idx = set.members.len() - 1;
            if stop(&set.members[idx]) {
                return Search::Found(set, idx);
            }
        }
        next += 1;
    }
    Search::Exhausted
}

/// Breadth-first search for `c` over words in `subgroup`'s signed generators with
/// `c·x·c⁻¹ = y` and `|c| ≤ max_len`. Returns a shortest such word.
///
/// Words that reach an already-seen conjugate are pruned, so every distinct conjugate
/// within the radius is tested exactly once.
pub fn brute_force_csp(
    x: &NormalForm,
    y: &NormalForm,
    params_or_n: SearchSpace,
    max_len: usize,
) -> Option<BraidWord> {
    let n = x.n();
    if y.n() != n {
        return None;
    }
    if x == y {
        return Some(BraidWord::identity(n));
    }
    if x.exponent_sum() != y.exponent_sum() {
        return None;
    }
    let gens: Vec<(Letter, NormalForm, NormalForm)> = params_or_n
        .generators()
        .flat_map(|i| [Letter::pos(i), Letter::neg(i)])
        .map(|l| {
            let g = BraidWord::new(n, vec![l]).expect("generator in range").normal_form();
            let gi = g.inverse();
            (l, g, gi)
        })
        .collect();
    // conjugate -> (parent conjugate, letter) for path recovery
    let mut seen: HashMap<NormalForm, Option<(NormalForm, Letter)>> = HashMap::new();
    seen.insert(x.clone(), None);
    let mut frontier = VecDeque::from([(x.clone(), 0usize)]);
    while let Some((z, depth)) = frontier.pop_front() {
        if depth == max_len {
            continue;
        }
        for (letter, g, gi) in &gens {
            let next = g.mul(&z).mul(gi);
            if seen.contains_key(&next) {
                continue;
            }
            seen.insert(next.clone(), Some((z.clone(), *letter)));
            if &next == y {
                let mut letters = Vec::new();
                let mut cur = next;
                while let Some(Some((prev, l))) = seen.get(&cur) {
                    letters.push(*l);
                    cur = prev.clone();
                }
                // letters were collected outermost first, which is already the word order
                return Some(BraidWord::new(n, letters).expect("letters in range"));
            }
            frontier.push_back((next, depth + 1));
        }
    }
    None
}

/// Which generators a brute-force search may use.
#[derive(Clone, Copy, Debug)]
pub enum SearchSpace {
    /// All of B_n.
    Full(usize),
    /// A subgroup of B_{l+r}.
    Subgroup(GroupParams, Subgroup),
}

impl SearchSpace {
    fn generators(&self) -> std::ops::Range<usize> {
        match self {
            SearchSpace::Full(n) => 1..*n,
            SearchSpace::Subgroup(p, s) => p.generators(*s),
        }
    }
}

/// Attacks the designated-verifier base problem: given `x_c`, `x'_c = a_c·x_c·a_c⁻¹`
/// with hidden `a_c ∈ RB_r`, and `α = b·x_c·b⁻¹` with hidden `b ∈ LB_l`, recovers
/// `a_c·α·a_c⁻¹`. Any right-subgroup conjugator works because it differs from `a_c`
/// by a right-subgroup element, which commutes with `b`.
pub fn solve_base_problem(
    params: &GroupParams,
    x_c: &NormalForm,
    x_c_prime: &NormalForm,
    alpha: &NormalForm,
    max_len: usize,
) -> Option<(BraidWord, NormalForm)> {
    let c = brute_force_csp(x_c, x_c_prime, SearchSpace::Subgroup(*params, Subgroup::Right), max_len)?;
    let beta = alpha.conjugate_by(&c.normal_form());
    Some((c, beta))
}
