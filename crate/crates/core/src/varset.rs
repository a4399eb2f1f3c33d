//! Finite sets of 1-based variable indices, packed into a 64-bit mask.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported ambient variable count.
pub const MAX_VARS: usize = 64;

/// A set of variable indices drawn from `1..=64`.
///
/// The ordering is the canonical one used throughout the crate: first by
/// cardinality, then lexicographically by the ascending member list.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VarSet(u64);

impl VarSet {
    pub const fn empty() -> Self {
        VarSet(0)
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VARS, "ambient size {n} exceeds {MAX_VARS}");
        if n == MAX_VARS {
            VarSet(u64::MAX)
        } else {
            VarSet((1u64 << n) - 1)
        }
    }

    pub const fn from_bits(bits: u64) -> Self {
        VarSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(i: usize) -> Self {
        assert!((1..=MAX_VARS).contains(&i), "variable index {i} out of range");
        VarSet(1u64 << (i - 1))
    }

    /// Builds a set from indices, rejecting anything outside `1..=bound`.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I, bound: usize) -> Result<Self> {
        let mut bits = 0u64;
        for i in indices {
            if i == 0 || i > bound || i > MAX_VARS {
                return Err(Error::IndexOutOfRange { index: i, bound });
            }
            bits |= 1u64 << (i - 1);
        }
        Ok(VarSet(bits))
    }

    /// Inclusive range `lo..=hi`; empty when `lo > hi`.
    pub fn range(lo: usize, hi: usize) -> Self {
        (lo..=hi).map(VarSet::singleton).fold(VarSet::empty(), |a, b| a | b)
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=MAX_VARS).contains(&i) && self.0 & (1u64 << (i - 1)) != 0
    }

    pub fn insert(&mut self, i: usize) {
        *self = *self | VarSet::singleton(i);
    }

    pub fn remove(&mut self, i: usize) {
        if self.contains(i) {
            self.0 &= !(1u64 << (i - 1));
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VarSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VarSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VarSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_superset(self, other: Self) -> bool {
        other.is_subset(self)
    }

    pub fn meets(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    /// `{1..n} \ self`.
    pub fn complement(self, n: usize) -> Self {
        VarSet::full(n).difference(self)
    }

    /// Smallest member, if any.
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Largest member, if any.
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, in no particular order.
    pub fn subsets(self) -> impl Iterator<Item = VarSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(VarSet(cur))
        })
    }

    /// Relabels members through `map`, where `map[i - 1]` is the new index of `i`.
    pub fn relabel(self, map: &[usize]) -> Self {
        self.iter()
            .map(|i| VarSet::singleton(map[i - 1]))
            .fold(VarSet::empty(), |a, b| a | b)
    }
}

/// Ascending iterator over the members of a [`VarSet`].
#[derive(Clone)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(tz + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

impl IntoIterator for VarSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl std::ops::BitOr for VarSet {
    type Output = VarSet;
    fn bitor(self, rhs: VarSet) -> VarSet {
        self.union(rhs)
    }
}

impl std::ops::BitAnd for VarSet {
    type Output = VarSet;
    fn bitand(self, rhs: VarSet) -> VarSet {
        self.intersection(rhs)
    }
}

impl std::ops::Sub for VarSet {
    type Output = VarSet;
    fn sub(self, rhs: VarSet) -> VarSet {
        self.difference(rhs)
    }
}

impl Ord for VarSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for VarSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for VarSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VarSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<usize>::deserialize(deserializer)?;
        VarSet::from_indices(raw, MAX_VARS).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_size_then_lex() {
        let a = VarSet::range(1, 7);
        let b = VarSet::from_indices([1, 2, 3, 4, 8, 9, 10], 10).unwrap();
        let c = VarSet::from_indices([3, 4, 5, 6, 7, 8], 10).unwrap();
        assert!(c < a);
        assert!(a < b);
    }

    #[test]
    fn subsets_enumerates_power_set() {
        let s = VarSet::from_indices([2, 5, 7], 8).unwrap();
        let mut all: Vec<_> = s.subsets().collect();
        all.sort();
        assert_eq!(all.len(), 8);
        assert_eq!(all[0], VarSet::empty());
        assert_eq!(all[7], s);
        assert!(all.iter().all(|t| t.is_subset(s)));
    }

    #[test]
    fn out_of_range_rejected() {
        assert_eq!(
            VarSet::from_indices([0], 3),
            Err(Error::IndexOutOfRange { index: 0, bound: 3 })
        );
        assert!(VarSet::from_indices([4], 3).is_err());
    }

    #[test]
    fn complement_and_extremes() {
        let s = VarSet::from_indices([2, 4], 5).unwrap();
        assert_eq!(s.complement(5).to_vec(), vec![1, 3, 5]);
        assert_eq!(s.min(), Some(2));
        assert_eq!(s.max(), Some(4));
        assert_eq!(VarSet::full(64).len(), 64);
        assert_eq!(s.to_string(), "{2,4}");
    }
}
