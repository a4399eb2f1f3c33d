use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::SquarefreeIdeal;
use crate::varset::VarSet;

/// Supports of the squarefree monomials in `I`, in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoset {
    n: usize,
    elements: Vec<VarSet>,
}

impl CharPoset {
    /// Enumerates all `2^n` supports; refuses `n > max_vars`.
    pub fn new(ideal: &SquarefreeIdeal, max_vars: usize) -> Result<Self> {
        let n = ideal.n();
        if n > max_vars {
            return Err(Error::BudgetExceeded(format!(
                "characteristic poset on {n} variables exceeds the cap of {max_vars}"
            )));
        }
        let mut elements: Vec<VarSet> = VarSet::full(n)
            .subsets()
            .filter(|&s| ideal.contains_monomial(s))
            .collect();
        elements.sort();
        Ok(CharPoset { n, elements })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[VarSet] {
        &self.elements
    }
}

/// The interval `[lower, upper]`, read as the Stanley space `x_lower · K[upper]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Interval {
    #[serde(rename = "u")]
    pub lower: VarSet,
    #[serde(rename = "Z")]
    pub upper: VarSet,
}

impl Interval {
    pub fn new(lower: VarSet, upper: VarSet) -> Self {
        Interval { lower, upper }
    }

    /// Number of sets in the interval, `2^{|upper \ lower|}`.
    pub fn cardinality(&self) -> u128 {
        1u128 << (self.upper - self.lower).len()
    }

    pub fn members(&self) -> impl Iterator<Item = VarSet> + '_ {
        (self.upper - self.lower).subsets().map(move |t| self.lower | t)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntervalPartition {
    pub intervals: Vec<Interval>,
}

impl IntervalPartition {
    /// `min |upper|`, the Stanley depth this partition certifies.
    pub fn witness_value(&self) -> Option<usize> {
        self.intervals.iter().map(|iv| iv.upper.len()).min()
    }
}

/// Disjointness and cover, after a cheap cardinality check.
pub fn verify_partition(poset: &CharPoset, partition: &IntervalPartition) -> bool {
    if partition.intervals.iter().any(|iv| !iv.lower.is_subset(iv.upper)) {
        return false;
    }
    let total: u128 = partition.intervals.iter().map(Interval::cardinality).sum();
    if total != poset.len() as u128 {
        return false;
    }
    let members: HashSet<VarSet> = poset.elements().iter().copied().collect();
    let mut seen: HashSet<VarSet> = HashSet::with_capacity(poset.len());
    for iv in &partition.intervals {
        for m in iv.members() {
            if !members.contains(&m) || !seen.insert(m) {
                return false;
            }
        }
    }
    seen.len() == poset.len()
}
