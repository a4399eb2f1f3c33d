//! Exact cover by dancing links, specialised to interval partitions.
//!
//! Columns are the poset elements of size at most `d`; rows are the
//! intervals `[A, B]` with `|B| = d`. The search branches on the column
//! with the fewest live rows and prunes with the rank-count condition on the
//! uncovered part of every upper set.

use std::time::Instant;

use itertools::Itertools;

use super::poset::Interval;
use crate::varset::VarSet;

const ROOT: usize = 0;

pub(crate) struct ExactCover {
    n: usize,
    d: usize,
    /// Element of each column, with a placeholder for the root.
    element: Vec<VarSet>,
    left: Vec<usize>,
    right: Vec<usize>,
    up: Vec<usize>,
    down: Vec<usize>,
    column: Vec<usize>,
    row_of: Vec<usize>,
    size: Vec<usize>,
    rows: Vec<Interval>,
    /// Uncovered elements containing `U`, by rank above `|U|`, at
    /// `U.bits() * (d + 1) + offset`.
    upper: Vec<i64>,
    pub chosen: Vec<Interval>,
    pub nodes: u64,
    /// Give up after this many nodes, as if out of time.
    pub node_limit: u64,
    deadline: Instant,
}

/// Binomial coefficient for small arguments.
fn choose(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Whether rank counts `r_0, ..., r_d` can come from intervals with tops of
/// size `d`. The number of intervals with bottom rank `j` is forced to be
/// `r_j - sum_{i<j} beta_i C(d-i, j-i)`, which must stay nonnegative.
fn ranks_feasible(ranks: &[i64], d: usize) -> bool {
    let mut beta = vec![0i64; d + 1];
    for j in 0..=d {
        let mut rest = ranks[j];
        for i in 0..j {
            rest -= beta[i] * choose(d - i, j - i);
        }
        if rest < 0 {
            return false;
        }
        beta[j] = rest;
    }
    true
}

impl ExactCover {
    /// `low` holds the elements of size at most `d` in canonical order.
    pub fn new(n: usize, d: usize, low: &[VarSet], deadline: Instant) -> Self {
        let cols = low.len();
        let mut index = vec![usize::MAX; 1usize << n];
        for (k, e) in low.iter().enumerate() {
            index[e.bits() as usize] = k + 1;
        }
        let mut dlx = ExactCover {
            n,
            d,
            element: std::iter::once(VarSet::empty()).chain(low.iter().copied()).collect(),
            left: (0..=cols).map(|c| if c == 0 { cols } else { c - 1 }).collect(),
            right: (0..=cols).map(|c| if c == cols { 0 } else { c + 1 }).collect(),
            up: (0..=cols).collect(),
            down: (0..=cols).collect(),
            column: (0..=cols).collect(),
            row_of: vec![usize::MAX; cols + 1],
            size: vec![0; cols + 1],
            rows: Vec::new(),
            upper: vec![0; (1usize << n) * (d + 1)],
            chosen: Vec::new(),
            nodes: 0,
            node_limit: u64::MAX,
            deadline,
        };
        for c in 1..=cols {
            dlx.shift_counts(c, 1);
        }
        for &bottom in low {
            let outside = (VarSet::full(n) - bottom).to_vec();
            for extra in outside.into_iter().combinations(d - bottom.len()) {
                let top = extra.into_iter().fold(bottom, |acc, x| acc | VarSet::singleton(x));
                let iv = Interval::new(bottom, top);
                let cols: Vec<usize> = iv.members().map(|m| index[m.bits() as usize]).collect();
                debug_assert!(cols.iter().all(|&c| c != usize::MAX), "the poset is upward closed");
                dlx.add_row(iv, &cols);
            }
        }
        dlx
    }

    fn add_row(&mut self, iv: Interval, cols: &[usize]) {
        let row = self.rows.len();
        self.rows.push(iv);
        let first = self.left.len();
        for (k, &c) in cols.iter().enumerate() {
            let node = first + k;
            let prev = if k == 0 { first + cols.len() - 1 } else { node - 1 };
            let next = if k + 1 == cols.len() { first } else { node + 1 };
            self.left.push(prev);
            self.right.push(next);
            self.up.push(self.up[c]);
            self.down.push(c);
            self.column.push(c);
            self.row_of.push(row);
            let above = self.up[c];
            self.down[above] = node;
            self.up[c] = node;
            self.size[c] += 1;
        }
    }

    fn cover(&mut self, c: usize) {
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = r;
        self.left[r] = l;
        self.shift_counts(c, -1);
        let mut i = self.down[c];
        while i != c {
            let mut j = self.right[i];
            while j != i {
                let (u, dn) = (self.up[j], self.down[j]);
                self.down[u] = dn;
                self.up[dn] = u;
                self.size[self.column[j]] -= 1;
                j = self.right[j];
            }
            i = self.down[i];
        }
    }

    fn uncover(&mut self, c: usize) {
        let mut i = self.up[c];
        while i != c {
            let mut j = self.left[i];
            while j != i {
                let (u, dn) = (self.up[j], self.down[j]);
                self.down[u] = j;
                self.up[dn] = j;
                self.size[self.column[j]] += 1;
                j = self.left[j];
            }
            i = self.up[i];
        }
        self.shift_counts(c, 1);
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = c;
        self.left[r] = c;
    }

    fn shift_counts(&mut self, c: usize, by: i64) {
        let e = self.element[c];
        let stride = self.d + 1;
        for u in e.subsets() {
            self.upper[u.bits() as usize * stride + e.len() - u.len()] += by;
        }
    }

    /// The rank count test on the uncovered part of the upper set
    /// `{σ ⊇ U}`. A partition restricts to one of every upper set, each
    /// interval keeping its top, so the test must pass at level `d - |U|`.
    fn upper_set_feasible(&self, u: VarSet) -> bool {
        let size = u.len();
        if size >= self.d {
            return true;
        }
        let ranks = &self.upper[u.bits() as usize * (self.d + 1)..][..=self.d - size];
        ranks_feasible(ranks, self.d - size)
    }

    /// `Some(true)` solved, `Some(false)` exhausted, `None` out of time.
    pub fn solve(&mut self) -> Option<bool> {
        if !VarSet::full(self.n).subsets().all(|u| self.upper_set_feasible(u)) {
            return Some(false);
        }
        self.search()
    }

    fn search(&mut self) -> Option<bool> {
        self.nodes += 1;
        if self.nodes >= self.node_limit || (self.nodes.is_multiple_of(256) && Instant::now() >= self.deadline) {
            return None;
        }
        if self.right[ROOT] == ROOT {
            return Some(true);
        }
        let mut best = self.right[ROOT];
        let mut c = self.right[best];
        while c != ROOT && self.size[best] > 0 {
            if self.size[c] < self.size[best] {
                best = c;
            }
            c = self.right[c];
        }
        if self.size[best] == 0 {
            return Some(false);
        }
        self.cover(best);
        let mut r = self.down[best];
        let mut outcome = Some(false);
        while r != best {
            let mut j = self.right[r];
            while j != r {
                self.cover(self.column[j]);
                j = self.right[j];
            }
            // Only upper sets below the new top changed.
            let top = self.rows[self.row_of[r]].upper;
            if top.subsets().all(|u| self.upper_set_feasible(u)) {
                self.chosen.push(self.rows[self.row_of[r]]);
                outcome = self.search();
                if outcome != Some(false) {
                    // Leave the links as they are; the caller only reads `chosen`.
                    return outcome;
                }
                self.chosen.pop();
            }
            let mut j = self.left[r];
            while j != r {
                self.uncover(self.column[j]);
                j = self.left[j];
            }
            r = self.down[r];
        }
        self.uncover(best);
        outcome
    }
}
