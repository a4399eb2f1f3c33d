mod common;

use common::{brute_contains, brute_profile, ideals, permutations, union_of};
use primegraph::{SquarefreeIdeal, VarSet};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn profile_matches_definitions(ideal in ideals(8, 6)) {
        let p = ideal.profile();
        let b = brute_profile(&ideal);
        prop_assert_eq!((p.h, p.v, p.t, p.size, p.bigsize, p.q), (b.h, b.v, b.t, b.size, b.bigsize, b.q));
        prop_assert!(p.size <= p.bigsize);
        prop_assert_eq!(p.support, union_of(ideal.primes()));
    }

    #[test]
    fn normalize_is_idempotent(n in 1usize..=8, raw in prop::collection::vec(0u64..256, 1..8)) {
        let sets: Vec<VarSet> = raw.iter().map(|&b| VarSet::from_bits(b & VarSet::full(n).bits())).collect();
        if let Ok(once) = SquarefreeIdeal::normalize(n, &sets) {
            let twice = SquarefreeIdeal::normalize(n, once.primes()).unwrap();
            prop_assert_eq!(&once, &twice);
            prop_assert_eq!(SquarefreeIdeal::new(n, once.primes().to_vec()).unwrap(), once);
        }
    }

    #[test]
    fn membership_is_transversal(ideal in ideals(8, 5)) {
        let gens = ideal.min_generators();
        for sigma in VarSet::full(ideal.n()).subsets() {
            let expected = brute_contains(&ideal, sigma);
            prop_assert_eq!(ideal.contains_monomial(sigma), expected);
            prop_assert_eq!(gens.iter().any(|g| g.is_subset(sigma)), expected);
        }
        // Generators are exactly the minimal transversals.
        for g in &gens {
            prop_assert!(brute_contains(&ideal, *g));
            for x in *g {
                prop_assert!(!brute_contains(&ideal, *g - VarSet::singleton(x)));
            }
        }
    }

    #[test]
    fn q_absent_iff_pairs_cover(ideal in ideals(8, 6)) {
        let p = ideal.profile();
        let free = ideal.n() - p.h;
        prop_assert_eq!(p.q.is_none(), p.t <= 2);
        if free == 0 && ideal.s() >= 2 {
            prop_assert_eq!(p.q.is_none(), p.bigsize == 1);
        }
    }

    #[test]
    fn relabeling_keeps_profile(
        (ideal, perm) in ideals(8, 6).prop_flat_map(|i| { let n = i.n(); (Just(i), permutations(n)) })
    ) {
        let a = ideal.profile();
        let b = ideal.permute_variables(&perm).profile();
        prop_assert_eq!((a.size, a.bigsize, a.q, a.h, a.v, a.t), (b.size, b.bigsize, b.q, b.h, b.v, b.t));
    }

    #[test]
    fn json_round_trips(ideal in ideals(10, 6)) {
        let text = ideal.to_json_string();
        prop_assert_eq!(SquarefreeIdeal::parse_json(&text).unwrap(), ideal);
    }
}
