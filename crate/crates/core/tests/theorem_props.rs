mod common;

use common::{complement_has_triangle, ideals};
use primegraph::homology::{depth_oracle, FieldSpec};
use primegraph::{depth_by_theorem, three_prime_formula, Certificate, PrimeSumGraph};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn applicable_verdicts_match_the_oracle(ideal in ideals(8, 6)) {
        let verdict = depth_by_theorem(&ideal);
        prop_assert_eq!(verdict.applicable, verdict.reduced_bigsize <= 2);
        if let Some(depth) = verdict.ideal_depth {
            for field in [FieldSpec::RATIONALS, FieldSpec::GF2] {
                prop_assert_eq!(depth_oracle(&ideal, field).unwrap().ideal_depth, depth);
            }
        }
    }

    #[test]
    fn verdict_shape(ideal in ideals(9, 7)) {
        let verdict = depth_by_theorem(&ideal);
        let Some(reduced) = verdict.reduced_module_depth else { return Ok(()) };
        let graph = PrimeSumGraph::build(&ideal);
        match verdict.certificate.unwrap() {
            Certificate::SinglePrime => prop_assert_eq!((ideal.s(), reduced), (1, 0)),
            Certificate::JoinSplit { .. } => {
                prop_assert_eq!(reduced, 1);
                prop_assert!(graph.join_split().is_some());
            }
            Certificate::ChainOfPairs { order } => {
                let q = verdict.q.unwrap();
                prop_assert!(q > 1);
                prop_assert_eq!(reduced, 1 + q);
                prop_assert_eq!(Some(order), graph.complement_spanning_path());
            }
            Certificate::Fallback { .. } => {
                prop_assert_eq!(reduced, 2);
                prop_assert!(graph.join_split().is_none());
            }
        }
        if ideal.s() >= 2 {
            prop_assert_eq!(graph.join_split().is_some(), reduced == 1);
        }
    }

    #[test]
    fn three_prime_formula_matches_oracle(ideal in ideals(8, 3)) {
        if let Ok(depth) = three_prime_formula(&ideal) {
            prop_assert_eq!(depth_oracle(&ideal, FieldSpec::RATIONALS).unwrap().ideal_depth, depth);
        }
    }
}

#[test]
fn seeded_bigsize_two_instances() {
    for ideal in common::bigsize2_instances(80) {
        let verdict = depth_by_theorem(&ideal);
        assert!(verdict.applicable);
        let expected = depth_oracle(&ideal, FieldSpec::RATIONALS).unwrap().ideal_depth;
        assert_eq!(verdict.ideal_depth, Some(expected), "{}", ideal.to_json_string());
        if complement_has_triangle(&ideal) {
            assert!(verdict.reduced_module_depth.unwrap() <= 2);
        }
    }
}
