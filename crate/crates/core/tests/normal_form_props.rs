mod common;

use braidsig::braid::{delta, BraidWord, GroupParams, NormalForm, PermutationFactor, Subgroup};
use braidsig::braid::random_braid;
use common::{perturb, rng};
use proptest::prelude::*;

fn word(n: usize, s: &[i32]) -> BraidWord {
    BraidWord::from_signed(n, s).unwrap()
}

fn signed_word(max_n: usize, max_len: usize) -> impl Strategy<Value = (usize, Vec<i32>)> {
    (3..=max_n).prop_flat_map(move |n| {
        let letter = (1..n as i32, any::<bool>()).prop_map(|(i, p)| if p { i } else { -i });
        (Just(n), prop::collection::vec(letter, 0..max_len))
    })
}

/// Checks the normal-form invariants factor by factor.
fn assert_canonical(x: &NormalForm) {
    let f = x.factors();
    assert!(f.iter().all(|a| !a.is_identity() && !a.is_delta()));
    for pair in f.windows(2) {
        let (a, b): (&PermutationFactor, &PermutationFactor) = (&pair[0], &pair[1]);
        assert_eq!(b.starting_set() & !a.finishing_set(), 0, "pair not left-weighted");
    }
    assert!(x.is_left_weighted());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn relator_insertion_keeps_normal_form((n, w) in signed_word(7, 24), seed in any::<u64>()) {
        let x = word(n, &w).normal_form();
        let y = word(n, &perturb(&w, n, 5, &mut rng(seed))).normal_form();
        prop_assert_eq!(&x, &y);
        assert_canonical(&x);
    }

    #[test]
    fn normal_form_spells_itself((n, w) in signed_word(7, 24)) {
        let x = word(n, &w).normal_form();
        prop_assert_eq!(x.to_word().normal_form(), x.clone());
        prop_assert_eq!(x.exponent_sum(), word(n, &w).exponent_sum());
        prop_assert_eq!(NormalForm::decode(&x.encode()).unwrap(), x);
    }

    #[test]
    fn group_axioms((n, a) in signed_word(6, 16), b in prop::collection::vec(1..5i32, 0..10)) {
        let x = word(n, &a).normal_form();
        let b: Vec<i32> = b.into_iter().map(|i| (i % (n as i32 - 1)) + 1).collect();
        let y = word(n, &b).normal_form();
        prop_assert!(x.mul(&x.inverse()).is_identity());
        prop_assert!(x.inverse().mul(&x).is_identity());
        prop_assert_eq!(x.mul(&NormalForm::identity(n)), x.clone());
        prop_assert_eq!(x.mul(&y), word(n, &a).multiply(&word(n, &b)).unwrap().normal_form());
        prop_assert_eq!(x.mul(&y).inverse(), y.inverse().mul(&x.inverse()));
    }

    #[test]
    fn tau_is_conjugation_by_delta((n, w) in signed_word(7, 20)) {
        let x = word(n, &w);
        let d = delta(n).unwrap();
        let via_delta = d.inverse().multiply(&x).unwrap().multiply(&d).unwrap();
        prop_assert!(x.tau().equals(&via_delta).unwrap());
        prop_assert_eq!(x.normal_form().tau(), x.tau().normal_form());
        prop_assert_eq!(x.tau().tau(), x);
    }

    #[test]
    fn far_subgroups_commute(l in 2usize..5, r in 2usize..5, seed in any::<u64>()) {
        let p = GroupParams::new(l, r).unwrap();
        let mut g = rng(seed);
        let a = random_braid(&p, Subgroup::Left, 12, &mut g).unwrap();
        let b = random_braid(&p, Subgroup::Right, 12, &mut g).unwrap();
        prop_assert!(a.multiply(&b).unwrap().equals(&b.multiply(&a).unwrap()).unwrap());
    }

    #[test]
    fn inf_sup_bound_the_exponent_sum((n, w) in signed_word(6, 20)) {
        let x = word(n, &w).normal_form();
        let half = (n * (n - 1) / 2) as i64;
        prop_assert!(x.inf() * half <= x.exponent_sum());
        prop_assert!(x.exponent_sum() <= x.sup() * half);
    }
}
