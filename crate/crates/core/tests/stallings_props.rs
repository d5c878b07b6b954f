mod common;

use common::strategies::{free_element, word};
use proptest::prelude::*;
use zdlab_core::stallings::{
    coset_decompose, evaluate_factorization, substitute_generators, Embedding, FoldOrder, SubgroupAutomaton,
};
use zdlab_core::{Exponent, FreeWord, GroupElement};

fn generators(rank: u32) -> impl Strategy<Value = Vec<FreeWord>> {
    prop::collection::vec(word(rank, 5), 1..=4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn folding_is_confluent(gens in generators(2), seed in any::<u64>()) {
        let a = SubgroupAutomaton::build(&gens, 2).unwrap();
        let b = SubgroupAutomaton::build_with_order(&gens, 2, FoldOrder::Shuffled(seed)).unwrap();
        prop_assert!(a.is_isomorphic(&b));
        prop_assert!(a.is_folded() && a.is_core());
        prop_assert!(a.subgroup_rank() <= gens.iter().filter(|g| !g.is_empty()).count());
    }

    #[test]
    fn generators_and_products_are_members(gens in generators(3), picks in prop::collection::vec((0usize..4, any::<bool>()), 0..6)) {
        let aut = SubgroupAutomaton::build(&gens, 3).unwrap();
        let product = picks.iter().fold(FreeWord::identity(), |acc, &(i, inv)| {
            let g = &gens[i % gens.len()];
            acc.mul(&if inv { g.inverse() } else { g.clone() })
        });
        for g in gens.iter().chain([&product]) {
            let m = aut.membership(g);
            prop_assert!(m.member);
            prop_assert_eq!(&evaluate_factorization(aut.basis(), &m.factorization), g);
            prop_assert_eq!(&substitute_generators(m.generator_word.as_ref().unwrap(), &gens), g);
        }
    }

    #[test]
    fn coset_split_reassembles(gens in generators(2), beta in free_element(2, 8, 5)) {
        let aut = SubgroupAutomaton::build(&gens, 2).unwrap();
        let pieces = coset_decompose(&beta, &aut).unwrap();
        prop_assert_eq!(pieces.reassemble().unwrap(), beta);
        for piece in pieces.pieces().values() {
            prop_assert!(piece.terms().all(|(h, _)| aut.contains(h)));
        }
    }

    #[test]
    fn embedding_is_isometric(alpha in free_element(4, 8, 5)) {
        let theta = Embedding::new(4).unwrap();
        let image = theta.apply(&alpha).unwrap();
        let mut before: Vec<String> = alpha.terms().map(|(_, c)| format!("{c:?}")).collect();
        let mut after: Vec<String> = image.terms().map(|(_, c)| format!("{c:?}")).collect();
        before.sort();
        after.sort();
        prop_assert_eq!(before, after);
        for p in [Exponent::integer(1).unwrap(), Exponent::integer(2).unwrap(), Exponent::integer(3).unwrap(), Exponent::Infinity] {
            // same multiset of moduli, summed in a different order
            let (a, b) = (image.lp_norm(p), alpha.lp_norm(p));
            prop_assert!((a - b).abs() <= 1e-14 * b.max(1.0));
        }
        prop_assert_eq!(theta.preimage(&image).unwrap(), alpha);
    }
}

#[test]
fn membership_agrees_with_enumeration() {
    // all products of at most four generators of ⟨x1², x2², x1x2⟩
    let gens: Vec<FreeWord> = ["x1 x1", "x2 x2", "x1 x2"].iter().map(|s| FreeWord::parse(s).unwrap()).collect();
    let aut = SubgroupAutomaton::build(&gens, 2).unwrap();
    let mut layer = vec![FreeWord::identity()];
    let mut members = std::collections::BTreeSet::from([FreeWord::identity()]);
    for _ in 0..4 {
        let mut next = Vec::new();
        for u in &layer {
            for g in &gens {
                for h in [g.clone(), g.inverse()] {
                    let v = u.mul(&h);
                    if members.insert(v.clone()) {
                        next.push(v);
                    }
                }
            }
        }
        layer = next;
    }
    assert!(members.iter().all(|u| aut.contains(u)));
    for len in 0..=3 {
        for u in zdlab_core::group::sphere(2, len) {
            if aut.contains(&u) {
                assert!(members.contains(&u), "{u} is a member but was not enumerated");
            }
        }
    }
    assert!(!aut.contains(&FreeWord::gen(1)));
}
