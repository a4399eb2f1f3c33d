//! Definition-level oracles and strategies shared by the integration tests.
#![allow(dead_code)]

use itertools::Itertools;
use primegraph::gen::{random_ideal, GenSpec, Target};
use primegraph::{Graph, SquarefreeIdeal, VarSet};
use proptest::prelude::*;

/// Random irredundant ideals on up to `max_n` variables with up to `max_s` primes.
pub fn ideals(max_n: usize, max_s: usize) -> impl Strategy<Value = SquarefreeIdeal> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(1u64..(1u64 << n), 1..=max_s).prop_map(move |raw| {
            let sets: Vec<VarSet> = raw.into_iter().map(|b| VarSet::from_bits(b)).collect();
            SquarefreeIdeal::normalize(n, &sets).expect("nonempty in-range family")
        })
    })
}

/// A permutation of `1..=n` as an image table.
pub fn permutations(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=n).collect::<Vec<_>>()).prop_shuffle()
}

pub fn union_of(sets: &[VarSet]) -> VarSet {
    sets.iter().fold(VarSet::empty(), |a, &b| a | b)
}

/// Invariants recomputed from their definitions by enumerating subfamilies.
#[derive(Debug, PartialEq, Eq)]
pub struct BruteProfile {
    pub h: usize,
    pub v: usize,
    pub t: usize,
    pub size: usize,
    pub bigsize: usize,
    pub q: Option<usize>,
}

pub fn brute_profile(ideal: &SquarefreeIdeal) -> BruteProfile {
    let primes = ideal.primes();
    let s = primes.len();
    let n = ideal.n();
    let total = union_of(primes);
    let h = total.len();
    let covers = |idx: &Vec<usize>| idx.iter().fold(VarSet::empty(), |a, &i| a | primes[i]) == total;
    let v = (1..=s).find(|&e| (0..s).combinations(e).any(|c| covers(&c))).unwrap();
    let t = (1..=s).find(|&e| (0..s).combinations(e).all(|c| covers(&c))).unwrap();
    let q = (0..s)
        .tuple_combinations()
        .filter(|&(i, j)| primes[i] | primes[j] != total)
        .map(|(i, j)| n - (primes[i] | primes[j]).len())
        .min();
    BruteProfile {
        h,
        v,
        t,
        size: v + (n - h) - 1,
        bigsize: t + (n - h) - 1,
        q,
    }
}

/// `σ ∈ I` iff `σ` meets every prime.
pub fn brute_contains(ideal: &SquarefreeIdeal, sigma: VarSet) -> bool {
    ideal.primes().iter().all(|p| p.meets(sigma))
}

/// Whether three primes have pairwise sums short of the support.
pub fn complement_has_triangle(ideal: &SquarefreeIdeal) -> bool {
    let primes = ideal.primes();
    let total = union_of(primes);
    let short = |i: usize, j: usize| primes[i] | primes[j] != total;
    (0..primes.len())
        .tuple_combinations()
        .any(|(a, b, c)| short(a, b) && short(a, c) && short(b, c))
}

/// The prime-sum graph straight from the definition.
pub fn brute_graph(ideal: &SquarefreeIdeal) -> Graph {
    let primes = ideal.primes();
    let total = union_of(primes);
    let edges = (0..primes.len())
        .tuple_combinations()
        .filter(|&(i, j)| primes[i] | primes[j] == total)
        .map(|(i, j)| (i + 1, j + 1));
    Graph::from_edges(primes.len(), edges)
}

/// Seeded support-reduced bigsize-2 instances with `n ≤ 9`, `s ≤ 6`,
/// mixing unconstrained, join and chain targets.
pub fn bigsize2_instances(count: usize) -> Vec<SquarefreeIdeal> {
    (0..count as u64)
        .map(|i| {
            let round = i / 4;
            let (n, s, target) = match i % 4 {
                3 => (9, 3 + (round % 3) as usize, Target::Chain),
                k => {
                    let s = 3 + (round % 4) as usize;
                    let n = (s + 2 + (round / 4 % 3) as usize).min(9);
                    (n, s, if k == 2 { Target::Join } else { Target::Bigsize2 })
                }
            };
            let spec = GenSpec::new(n, s, target, 1000 + i);
            random_ideal(&spec).unwrap_or_else(|e| panic!("{spec:?}: {e}")).ideal
        })
        .collect()
}
