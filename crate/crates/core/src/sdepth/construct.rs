//! Constructive partitions by splitting on a variable.
//!
//! The monomials of `I` not divisible by `x` form the poset of `I ∩ S'`, and
//! the ones divisible by `x` are `x` times the poset of `(I : x) ∩ S'`. A
//! partition of the first piece at level `d` and of the second at level
//! `d - 1` glue into a partition of `I` at level `d`. Pieces small enough are
//! handed to the exact solver with a node limit, so a failure here says
//! nothing about infeasibility.

use std::collections::HashMap;
use std::time::Instant;

use super::cover::ExactCover;
use super::poset::{CharPoset, Interval};
use crate::ideal::SquarefreeIdeal;
use crate::varset::VarSet;

/// Pieces with at most this many poset elements go to the exact solver
/// first; running out of nodes there falls back to splitting.
const EXACT_PIECE: usize = 160;
const EXACT_NODES: u64 = 5_000;

enum Piece {
    /// The zero ideal: nothing to cover.
    Zero,
    /// The whole ring on this many variables.
    Whole(usize),
    Ideal(SquarefreeIdeal),
}

type Key = (usize, Vec<u64>, usize);

pub(crate) struct Constructor {
    deadline: Instant,
    memo: HashMap<Key, Option<Vec<Interval>>>,
}

impl Constructor {
    pub fn new(deadline: Instant) -> Self {
        Constructor {
            deadline,
            memo: HashMap::new(),
        }
    }

    /// A partition of the whole poset of `ideal` whose intervals all have
    /// tops of size at least `d`, if one turns up.
    pub fn partition(&mut self, ideal: &SquarefreeIdeal, d: usize) -> Option<Vec<Interval>> {
        self.solve(&Piece::Ideal(ideal.clone()), d)
    }

    fn solve(&mut self, piece: &Piece, d: usize) -> Option<Vec<Interval>> {
        let ideal = match piece {
            Piece::Zero => return Some(Vec::new()),
            Piece::Whole(n) => {
                return (*n >= d).then(|| vec![Interval::new(VarSet::empty(), VarSet::full(*n))]);
            }
            Piece::Ideal(ideal) => ideal,
        };
        let n = ideal.n();
        if d > n {
            return None;
        }
        let mut primes: Vec<u64> = ideal.primes().iter().map(|p| p.bits()).collect();
        primes.sort_unstable();
        let key = (n, primes, d);
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let found = self.search(ideal, d);
        // A timeout is not a verdict, so only remember what finished in time.
        if found.is_some() || Instant::now() < self.deadline {
            self.memo.insert(key, found.clone());
        }
        found
    }

    fn search(&mut self, ideal: &SquarefreeIdeal, d: usize) -> Option<Vec<Interval>> {
        let n = ideal.n();
        let poset = CharPoset::new(ideal, 64).ok()?;
        if d <= 1 {
            return Some(poset.elements().iter().map(|&e| Interval::new(e, e)).collect());
        }
        if poset.len() <= EXACT_PIECE {
            let low: Vec<VarSet> = poset.elements().iter().copied().filter(|e| e.len() <= d).collect();
            let mut cover = ExactCover::new(n, d, &low, self.deadline);
            cover.node_limit = EXACT_NODES;
            let solved = cover.solve();
            if solved == Some(true) {
                let mut intervals = cover.chosen;
                intervals.extend(
                    poset
                        .elements()
                        .iter()
                        .filter(|e| e.len() > d)
                        .map(|&e| Interval::new(e, e)),
                );
                return Some(intervals);
            }
            if solved == Some(false) {
                return None;
            }
        }
        for x in ideal.support().iter() {
            if Instant::now() >= self.deadline {
                return None;
            }
            let without = match ideal.delete_variable(x).ok()? {
                None => Piece::Zero,
                Some(rest) => Piece::Ideal(rest),
            };
            let Some(left) = self.solve(&without, d) else {
                continue;
            };
            let with = match ideal.colon(x).ok()? {
                None => Piece::Whole(n - 1),
                Some(colon) => match colon.delete_variable(x).ok()? {
                    // Deleting a variable outside every prime never empties one.
                    None => Piece::Whole(n - 1),
                    Some(rest) => Piece::Ideal(rest),
                },
            };
            let Some(right) = self.solve(&with, d - 1) else {
                continue;
            };
            let mut intervals: Vec<Interval> = left
                .into_iter()
                .map(|iv| Interval::new(lift(iv.lower, x), lift(iv.upper, x)))
                .collect();
            let tag = VarSet::singleton(x);
            intervals.extend(
                right
                    .into_iter()
                    .map(|iv| Interval::new(lift(iv.lower, x) | tag, lift(iv.upper, x) | tag)),
            );
            return Some(intervals);
        }
        None
    }
}

/// Reinserts variable `x`: indices from `x` up move one place higher.
fn lift(set: VarSet, x: usize) -> VarSet {
    let bits = set.bits();
    let below = bits & ((1u64 << (x - 1)) - 1);
    let above = (bits >> (x - 1)) << x;
    VarSet::from_bits(below | above)
}

#[cfg(test)]
mod tests {
    use std::time::Duration;

    use super::*;
    use crate::sdepth::poset::{verify_partition, IntervalPartition};

    fn vs(xs: &[usize]) -> VarSet {
        VarSet::from_indices(xs.iter().copied(), 64).unwrap()
    }

    #[test]
    fn lift_shifts_upper_indices() {
        assert_eq!(lift(vs(&[1, 2, 3]), 2), vs(&[1, 3, 4]));
        assert_eq!(lift(vs(&[1]), 1), vs(&[2]));
        assert_eq!(lift(vs(&[1, 2]), 3), vs(&[1, 2]));
    }

    #[test]
    fn maximal_ideal_on_eight_variables() {
        // sdepth of the maximal ideal in 8 variables is 4.
        let m = SquarefreeIdeal::new(8, vec![VarSet::full(8)]).unwrap();
        let mut c = Constructor::new(Instant::now() + Duration::from_secs(20));
        let intervals = c.partition(&m, 4).expect("level 4 is attainable");
        let poset = CharPoset::new(&m, 16).unwrap();
        let partition = IntervalPartition { intervals };
        assert!(verify_partition(&poset, &partition));
        assert!(partition.witness_value().unwrap() >= 4);
    }
}
