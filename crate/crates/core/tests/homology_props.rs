mod common;

use common::ideals;
use primegraph::homology::{depth_oracle, FieldSpec, SimplicialComplex};
use primegraph::{SquarefreeIdeal, VarSet};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lyubeznik_bound(ideal in ideals(8, 6)) {
        let depth = depth_oracle(&ideal, FieldSpec::RATIONALS).unwrap();
        prop_assert!(depth.ideal_depth >= 1 + ideal.profile().size);
    }

    #[test]
    fn free_variables_add_to_depth(ideal in ideals(8, 5)) {
        let (reduced, _) = ideal.reduce_to_support();
        let whole = depth_oracle(&ideal, FieldSpec::RATIONALS).unwrap();
        let part = depth_oracle(&reduced, FieldSpec::RATIONALS).unwrap();
        prop_assert_eq!(part.module_depth + ideal.free_variable_count(), whole.module_depth);
    }

    #[test]
    fn depth_never_exceeds_dimension(ideal in ideals(8, 5)) {
        let depth = depth_oracle(&ideal, FieldSpec::GF2).unwrap();
        let min_height = ideal.primes().iter().map(|p| p.len()).min().unwrap();
        prop_assert!(depth.module_depth <= ideal.n() - min_height);
    }

    #[test]
    fn two_primes_follow_the_depth_lemma(n in 2usize..=8, a in 1u64..256, b in 1u64..256) {
        let full = VarSet::full(n).bits();
        let (p1, p2) = (VarSet::from_bits(a & full), VarSet::from_bits(b & full));
        prop_assume!(!p1.is_empty() && !p2.is_empty() && !p1.is_subset(p2) && !p2.is_subset(p1));
        let ideal = SquarefreeIdeal::new(n, vec![p1, p2]).unwrap();
        // 0 → S/I → S/P1 ⊕ S/P2 → S/(P1+P2) → 0 with depth S/(P1+P2) below both summands.
        let expected = (n - p1.len()).min(n - p2.len()).min(n - (p1 | p2).len() + 1);
        for field in [FieldSpec::RATIONALS, FieldSpec::GF2] {
            prop_assert_eq!(depth_oracle(&ideal, field).unwrap().module_depth, expected);
        }
    }

    #[test]
    fn complexes_pass_self_checks(ideal in ideals(7, 6), sigma_bits in any::<u64>()) {
        let delta = SimplicialComplex::stanley_reisner(&ideal);
        let sigma = VarSet::from_bits(sigma_bits) & VarSet::full(ideal.n());
        for field in [FieldSpec::RATIONALS, FieldSpec::GF2, FieldSpec::new(3).unwrap()] {
            prop_assert!(delta.self_check(field).passed());
            prop_assert!(delta.induced(sigma).self_check(field).passed());
        }
    }
}

#[test]
fn characteristics_agree_on_bigsize_two() {
    for ideal in common::bigsize2_instances(60) {
        let zero = depth_oracle(&ideal, FieldSpec::RATIONALS).unwrap();
        let two = depth_oracle(&ideal, FieldSpec::GF2).unwrap();
        assert_eq!(zero.ideal_depth, two.ideal_depth, "{}", ideal.to_json_string());
    }
}

#[test]
fn simplices_and_spheres() {
    for n in 1..=7 {
        let verts = VarSet::full(n);
        for field in [FieldSpec::RATIONALS, FieldSpec::GF2] {
            assert!(SimplicialComplex::simplex(verts).reduced_homology(field).is_acyclic());
            let h = SimplicialComplex::sphere(verts).reduced_homology(field);
            let k = n as isize - 2;
            assert_eq!(h.degree(k), 1);
            assert_eq!(h.dims.iter().sum::<usize>(), 1);
        }
    }
}
