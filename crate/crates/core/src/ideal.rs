//! Squarefree monomial ideals presented by their minimal primes.
//!
//! An ideal `I = P_1 ∩ ... ∩ P_s` is stored as the ambient variable count
//! and the list of prime supports. Primes are numbered from 1 in the order
//! they were supplied, so that reports and graph vertices keep the caller's
//! numbering. [`SquarefreeIdeal::canonicalized`] gives the canonical order.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::varset::{VarSet, MAX_VARS};

/// `I = ∩ P_i` for an irredundant family of nonempty monomial primes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SquarefreeIdeal {
    n: usize,
    primes: Vec<VarSet>,
}

/// Numeric invariants of an ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealProfile {
    pub n: usize,
    pub s: usize,
    pub support: VarSet,
    /// Height of the sum of all primes.
    pub h: usize,
    /// Fewest primes whose sum is the support.
    pub v: usize,
    /// Least `e` such that every `e` primes sum to the support.
    pub t: usize,
    pub size: usize,
    pub bigsize: usize,
    /// Minimal `dim S/(P_i+P_j)` over pairs whose sum is not the support.
    pub q: Option<usize>,
}

/// The on-disk ideal format: `{"n": 4, "primes": [[1, 2], [3, 4]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub n: usize,
    pub primes: Vec<Vec<usize>>,
}

impl Serialize for SquarefreeIdeal {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

fn check_ambient(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VARS {
        Err(Error::UnsupportedAmbient(n))
    } else {
        Ok(())
    }
}

impl SquarefreeIdeal {
    /// Strict constructor: every prime must be nonempty, in range and
    /// incomparable with every other prime. Order is preserved.
    pub fn new(n: usize, primes: Vec<VarSet>) -> Result<Self> {
        check_ambient(n)?;
        if primes.is_empty() {
            return Err(Error::EmptyFamily);
        }
        let full = VarSet::full(n);
        for (k, p) in primes.iter().enumerate() {
            if p.is_empty() {
                return Err(Error::EmptyPrime { index: k + 1 });
            }
            if !p.is_subset(full) {
                return Err(Error::IndexOutOfRange {
                    index: VarSet::max(*p).unwrap_or(0),
                    bound: n,
                });
            }
        }
        for (a, b) in (0..primes.len()).tuple_combinations() {
            if primes[a].is_subset(primes[b]) || primes[b].is_subset(primes[a]) {
                return Err(Error::Redundant {
                    first: a + 1,
                    second: b + 1,
                });
            }
        }
        Ok(SquarefreeIdeal { n, primes })
    }

    /// Lenient constructor: drops empty sets, duplicates and any set that
    /// contains another one. Survivors keep their first-occurrence order.
    pub fn normalize(n: usize, raw: &[VarSet]) -> Result<Self> {
        check_ambient(n)?;
        let full = VarSet::full(n);
        if let Some(bad) = raw.iter().find(|p| !p.is_subset(full)) {
            return Err(Error::IndexOutOfRange {
                index: VarSet::max(*bad).unwrap_or(0),
                bound: n,
            });
        }
        let mut kept: Vec<VarSet> = Vec::new();
        for (k, &p) in raw.iter().enumerate() {
            if p.is_empty() || kept.contains(&p) {
                continue;
            }
            let dominated = raw
                .iter()
                .enumerate()
                .any(|(j, &r)| j != k && !r.is_empty() && r != p && r.is_subset(p));
            if !dominated {
                kept.push(p);
            }
        }
        if kept.is_empty() {
            return Err(Error::EmptyFamily);
        }
        Ok(SquarefreeIdeal { n, primes: kept })
    }

    /// The same ideal with primes sorted canonically (size, then lexicographic).
    pub fn canonicalized(&self) -> Self {
        let mut primes = self.primes.clone();
        primes.sort();
        SquarefreeIdeal { n: self.n, primes }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> usize {
        self.primes.len()
    }

    pub fn primes(&self) -> &[VarSet] {
        &self.primes
    }

    /// Prime `P_i`, 1-based.
    pub fn prime(&self, i: usize) -> Option<VarSet> {
        i.checked_sub(1).and_then(|k| self.primes.get(k)).copied()
    }

    /// `ΣP_i` as a variable set.
    pub fn support(&self) -> VarSet {
        self.primes.iter().fold(VarSet::empty(), |a, &p| a | p)
    }

    /// Variables that occur in no prime.
    pub fn free_variable_count(&self) -> usize {
        self.n - self.support().len()
    }

    /// Union of the selected primes (1-based indices).
    pub fn sum_of<I: IntoIterator<Item = usize>>(&self, indices: I) -> Result<VarSet> {
        let mut acc = VarSet::empty();
        let mut any = false;
        for i in indices {
            let p = self.prime(i).ok_or(Error::IndexOutOfRange {
                index: i,
                bound: self.s(),
            })?;
            acc = acc | p;
            any = true;
        }
        if !any {
            return Err(Error::EmptySelection);
        }
        Ok(acc)
    }

    /// Whether the squarefree monomial `x_σ` lies in `I`.
    pub fn contains_monomial(&self, sigma: VarSet) -> bool {
        self.primes.iter().all(|&p| p.meets(sigma))
    }

    /// Supports of the minimal monomial generators: the minimal transversals
    /// of the prime family, in canonical order.
    pub fn min_generators(&self) -> Vec<VarSet> {
        let mut transversals = vec![VarSet::empty()];
        for &p in &self.primes {
            let mut next: Vec<VarSet> = Vec::new();
            for &t in &transversals {
                if t.meets(p) {
                    next.push(t);
                } else {
                    next.extend(p.iter().map(|x| t | VarSet::singleton(x)));
                }
            }
            next.sort();
            next.dedup();
            transversals = minimal_elements(&next);
        }
        transversals.sort();
        transversals
    }

    pub fn profile(&self) -> IdealProfile {
        let support = self.support();
        let s = self.s();
        let h = support.len();
        let covers = |combo: &[&VarSet]| combo.iter().fold(VarSet::empty(), |a, &&p| a | p) == support;
        let v = (1..=s)
            .find(|&e| self.primes.iter().combinations(e).any(|c| covers(&c)))
            .unwrap_or(s);
        let t = (1..=s)
            .find(|&e| self.primes.iter().combinations(e).all(|c| covers(&c)))
            .unwrap_or(s);
        let q = (0..s)
            .tuple_combinations()
            .map(|(a, b)| self.primes[a] | self.primes[b])
            .filter(|&u| u != support)
            .map(|u| self.n - u.len())
            .min();
        IdealProfile {
            n: self.n,
            s,
            support,
            h,
            v,
            t,
            size: v + (self.n - h) - 1,
            bigsize: t + (self.n - h) - 1,
            q,
        }
    }

    /// The ideal generated in the polynomial ring on its support only.
    ///
    /// Returns the relabeled ideal (support variables renumbered
    /// `1..=h` in increasing order) and the original index of each new variable.
    pub fn reduce_to_support(&self) -> (SquarefreeIdeal, Vec<usize>) {
        let support = self.support();
        let originals = support.to_vec();
        let mut map = vec![0usize; self.n];
        for (new, &old) in originals.iter().enumerate() {
            map[old - 1] = new + 1;
        }
        let primes = self.primes.iter().map(|p| p.relabel(&map)).collect();
        (
            SquarefreeIdeal {
                n: support.len(),
                primes,
            },
            originals,
        )
    }

    /// `I ∩ S'` where `S'` drops variable `x`; remaining variables above `x`
    /// shift down by one. `None` when the intersection is the zero ideal.
    pub fn delete_variable(&self, x: usize) -> Result<Option<SquarefreeIdeal>> {
        if x == 0 || x > self.n {
            return Err(Error::UnknownVariable(x));
        }
        if self.n == 1 {
            return Ok(None);
        }
        // Entry for `x` itself is never read.
        let map: Vec<usize> = (1..=self.n)
            .map(|i| if i <= x { i.min(self.n - 1) } else { i - 1 })
            .collect();
        let mut raw = Vec::with_capacity(self.s());
        for &p in &self.primes {
            let mut rest = p;
            rest.remove(x);
            if rest.is_empty() {
                return Ok(None);
            }
            raw.push(rest.relabel(&map));
        }
        SquarefreeIdeal::normalize(self.n - 1, &raw).map(Some)
    }

    /// `(I : x_x)`; `None` when every prime contains `x`, i.e. the colon is `S`.
    pub fn colon(&self, x: usize) -> Result<Option<SquarefreeIdeal>> {
        if x == 0 || x > self.n {
            return Err(Error::UnknownVariable(x));
        }
        let rest: Vec<VarSet> = self.primes.iter().copied().filter(|p| !p.contains(x)).collect();
        if rest.is_empty() {
            return Ok(None);
        }
        Ok(Some(SquarefreeIdeal {
            n: self.n,
            primes: rest,
        }))
    }

    /// Intersection of a subfamily of the primes (1-based, kept in the given order).
    pub fn subfamily(&self, indices: &[usize]) -> Result<SquarefreeIdeal> {
        if indices.is_empty() {
            return Err(Error::EmptySelection);
        }
        let primes = indices
            .iter()
            .map(|&i| {
                self.prime(i).ok_or(Error::IndexOutOfRange {
                    index: i,
                    bound: self.s(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        SquarefreeIdeal::normalize(self.n, &primes)
    }

    /// Applies a permutation of the variables; `perm[i - 1]` is the image of `i`.
    pub fn permute_variables(&self, perm: &[usize]) -> SquarefreeIdeal {
        assert_eq!(perm.len(), self.n);
        SquarefreeIdeal {
            n: self.n,
            primes: self.primes.iter().map(|p| p.relabel(perm)).collect(),
        }
    }

    /// Adds `extra` unused variables at the top of the index range.
    pub fn with_free_variables(&self, extra: usize) -> Result<SquarefreeIdeal> {
        check_ambient(self.n + extra)?;
        Ok(SquarefreeIdeal {
            n: self.n + extra,
            primes: self.primes.clone(),
        })
    }

    pub fn to_json(&self) -> IdealJson {
        IdealJson {
            n: self.n,
            primes: self.primes.iter().map(|p| p.to_vec()).collect(),
        }
    }

    /// Validates the JSON form. Inner lists must be strictly increasing and
    /// the family irredundant.
    pub fn from_json(raw: &IdealJson) -> Result<Self> {
        check_ambient(raw.n)?;
        let mut primes = Vec::with_capacity(raw.primes.len());
        for (k, list) in raw.primes.iter().enumerate() {
            if list.is_empty() {
                return Err(Error::EmptyPrime { index: k + 1 });
            }
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::NotStrictlyIncreasing { index: k + 1 });
            }
            primes.push(VarSet::from_indices(list.iter().copied(), raw.n)?);
        }
        SquarefreeIdeal::new(raw.n, primes)
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        let raw: IdealJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        SquarefreeIdeal::from_json(&raw)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("ideal JSON is always serializable")
    }
}

/// Inclusion-minimal members of a family.
pub(crate) fn minimal_elements(family: &[VarSet]) -> Vec<VarSet> {
    family
        .iter()
        .copied()
        .filter(|&a| !family.iter().any(|&b| b != a && b.is_subset(a)))
        .collect()
}
