mod common;

use std::time::Duration;

use common::{ideals, permutations};
use primegraph::sdepth::{
    hpv_lower_bound, sdepth_at_least, sdepth_exact, split_variable_bound, verify_partition, CharPoset, SearchConfig,
    SearchOutcome,
};
use primegraph::{SquarefreeIdeal, VarSet};
use proptest::prelude::*;

fn config() -> SearchConfig {
    SearchConfig::with_budget(Duration::from_secs(30))
}

/// Stanley depth by enumerating every interval partition of the whole
/// poset, with arbitrary tops.
fn brute_sdepth(ideal: &SquarefreeIdeal) -> usize {
    let n = ideal.n();
    let members: Vec<VarSet> = VarSet::full(n)
        .subsets()
        .filter(|s| ideal.contains_monomial(*s))
        .collect();
    fn best(members: &[VarSet], covered: &mut Vec<bool>, n: usize) -> Option<usize> {
        let Some(first) = (0..members.len()).find(|&k| !covered[k]) else {
            return Some(n);
        };
        let lower = members[first];
        let mut answer: Option<usize> = None;
        for upper in VarSet::full(n).subsets().filter(|b| b.is_superset(lower)) {
            let idx: Vec<usize> = (0..members.len())
                .filter(|&k| members[k].is_superset(lower) && members[k].is_subset(upper))
                .collect();
            if idx.len() != 1 << (upper.len() - lower.len()) || idx.iter().any(|&k| covered[k]) {
                continue;
            }
            if answer.is_some_and(|a| a >= upper.len()) {
                continue;
            }
            for &k in &idx {
                covered[k] = true;
            }
            if let Some(rest) = best(members, covered, n) {
                let v = rest.min(upper.len());
                answer = Some(answer.map_or(v, |a| a.max(v)));
            }
            for &k in &idx {
                covered[k] = false;
            }
        }
        answer
    }
    let mut covered = vec![false; members.len()];
    best(&members, &mut covered, n).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn exact_matches_unrestricted_enumeration(ideal in ideals(4, 4)) {
        prop_assert_eq!(sdepth_exact(&ideal, config()).unwrap().value, brute_sdepth(&ideal));
    }

    #[test]
    fn exact_value_is_tight_and_certified(ideal in ideals(6, 5)) {
        let exact = sdepth_exact(&ideal, config()).unwrap();
        let poset = CharPoset::new(&ideal, 16).unwrap();
        prop_assert!(verify_partition(&poset, &exact.certificate));
        prop_assert_eq!(exact.certificate.witness_value(), Some(exact.value));
        match sdepth_at_least(&ideal, exact.value, config()).unwrap() {
            SearchOutcome::Feasible { partition } => prop_assert!(verify_partition(&poset, &partition)),
            other => prop_assert!(false, "expected feasible, got {:?}", other),
        }
        if exact.value < ideal.n() {
            prop_assert_eq!(sdepth_at_least(&ideal, exact.value + 1, config()).unwrap(), SearchOutcome::Infeasible);
        }
    }

    #[test]
    fn exact_dominates_lower_bounds(ideal in ideals(6, 5)) {
        let exact = sdepth_exact(&ideal, config()).unwrap().value;
        prop_assert!(exact >= hpv_lower_bound(&ideal));
        for x in ideal.support() {
            let split = split_variable_bound(&ideal, x, 1, config()).unwrap();
            prop_assert!(exact >= split.value, "x{} gives {} > {}", x, split.value, exact);
        }
    }

    #[test]
    fn relabeling_keeps_sdepth(
        (ideal, perm) in ideals(6, 5).prop_flat_map(|i| { let n = i.n(); (Just(i), permutations(n)) })
    ) {
        let a = sdepth_exact(&ideal, config()).unwrap().value;
        let b = sdepth_exact(&ideal.permute_variables(&perm), config()).unwrap().value;
        prop_assert_eq!(a, b);
    }
}
