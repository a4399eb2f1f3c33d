//! Exact interval-partition search for Stanley depth.
//!
//! `sdepth I ≥ d` iff the elements of the characteristic poset of size at
//! most `d` split into intervals `[A, B]` with `|B| = d`: any interval with
//! a top larger than `d`, cut at rank `d`, splits into such intervals, and
//! elements above rank `d` can always stand alone.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::construct::Constructor;
use super::cover::ExactCover;
use super::poset::{verify_partition, CharPoset, Interval, IntervalPartition};
use crate::error::{Error, Result};
use crate::ideal::SquarefreeIdeal;
use crate::varset::VarSet;

/// Node allowance of the first restart; later ones scale it by Luby's sequence.
const RESTART_NODES: u64 = 2_000;

/// Caps for the exact solver.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Wall-clock limit per call.
    pub budget: Duration,
    /// `sdepth_exact` refuses posets with more elements than this.
    pub max_exact_poset: usize,
    /// No poset is built on more variables than this.
    pub max_vars: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: Duration::from_millis(60_000),
            max_exact_poset: 1024,
            max_vars: 16,
        }
    }
}

impl SearchConfig {
    pub fn with_budget(budget: Duration) -> Self {
        SearchConfig {
            budget,
            ..SearchConfig::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SearchOutcome {
    Feasible { partition: IntervalPartition },
    Infeasible,
    Unknown { elapsed_ms: u64, nodes: u64 },
}

impl SearchOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, SearchOutcome::Feasible { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactSdepth {
    pub value: usize,
    pub certificate: IntervalPartition,
}

/// Decides `sdepth I ≥ d` within the configured budget.
pub fn sdepth_at_least(ideal: &SquarefreeIdeal, d: usize, config: SearchConfig) -> Result<SearchOutcome> {
    let deadline = Instant::now() + config.budget;
    let poset = CharPoset::new(ideal, config.max_vars)?;
    Ok(at_least_on(ideal, &poset, d, deadline))
}

/// Largest `d` with a feasible partition, with its verified certificate.
pub fn sdepth_exact(ideal: &SquarefreeIdeal, config: SearchConfig) -> Result<ExactSdepth> {
    let deadline = Instant::now() + config.budget;
    let poset = CharPoset::new(ideal, config.max_vars)?;
    if poset.len() > config.max_exact_poset {
        return Err(Error::BudgetExceeded(format!(
            "poset has {} elements, exact search is capped at {}",
            poset.len(),
            config.max_exact_poset
        )));
    }
    for d in (1..=ideal.n()).rev() {
        match at_least_on(ideal, &poset, d, deadline) {
            SearchOutcome::Feasible { partition } => {
                return Ok(ExactSdepth {
                    value: d,
                    certificate: partition,
                })
            }
            SearchOutcome::Infeasible => {}
            SearchOutcome::Unknown { elapsed_ms, nodes } => {
                return Err(Error::BudgetExceeded(format!(
                    "level {d} undecided after {elapsed_ms} ms and {nodes} nodes"
                )))
            }
        }
    }
    unreachable!("singleton intervals always certify sdepth ≥ 1")
}

pub(crate) fn at_least_on(ideal: &SquarefreeIdeal, poset: &CharPoset, d: usize, deadline: Instant) -> SearchOutcome {
    decide(ideal, poset, d, deadline, true)
}

/// The elements divisible by `x_x`, with `x_x` stripped: the poset of
/// `(I : x) ∩ S'` in the remaining variables, or `None` when that is the
/// whole ring.
fn link(ideal: &SquarefreeIdeal, x: usize) -> Option<SquarefreeIdeal> {
    let colon = ideal.colon(x).ok()??;
    colon.delete_variable(x).ok()?
}

fn decide(ideal: &SquarefreeIdeal, poset: &CharPoset, d: usize, deadline: Instant, links: bool) -> SearchOutcome {
    let n = poset.n();
    if d > n {
        return SearchOutcome::Infeasible;
    }
    if d <= 1 {
        let intervals = poset.elements().iter().map(|&e| Interval::new(e, e)).collect();
        return SearchOutcome::Feasible {
            partition: IntervalPartition { intervals },
        };
    }
    // Splitting often finds a partition long before exhaustive search would.
    if let Some(intervals) = Constructor::new(deadline).partition(ideal, d) {
        let partition = IntervalPartition { intervals };
        assert!(
            verify_partition(poset, &partition),
            "splitting produced an invalid partition"
        );
        return SearchOutcome::Feasible { partition };
    }
    // A partition at level d restricts to the monomials divisible by x_x,
    // which gives one of the link at level d - 1. Links are a variable
    // smaller, so refuting one is usually quick.
    if links {
        let slice = deadline.saturating_duration_since(Instant::now()) / (2 * n as u32);
        for x in ideal.support().iter() {
            let Some(smaller) = link(ideal, x) else {
                if n - 1 < d - 1 {
                    return SearchOutcome::Infeasible;
                }
                continue;
            };
            let Ok(sub) = CharPoset::new(&smaller, 64) else {
                continue;
            };
            let until = deadline.min(Instant::now() + slice);
            if decide(&smaller, &sub, d - 1, until, false) == SearchOutcome::Infeasible {
                return SearchOutcome::Infeasible;
            }
        }
    }
    restarts(poset, d, deadline)
}

/// Dancing-links search, restarted on randomly relabelled copies with a
/// node limit that follows Luby's sequence. Feasible levels usually have
/// many partitions that one fixed branching order can miss for a long
/// time; the growing limits keep the search complete, and any round that
/// runs out of rows refutes the level. The seeds are fixed, so only the
/// time allowed can change the outcome.
fn restarts(poset: &CharPoset, d: usize, deadline: Instant) -> SearchOutcome {
    let started = Instant::now();
    let n = poset.n();
    let mut nodes = 0;
    for round in 0u64.. {
        if Instant::now() >= deadline {
            break;
        }
        let mut map: Vec<usize> = (1..=n).collect();
        if round > 0 {
            map.shuffle(&mut ChaCha8Rng::seed_from_u64(round));
        }
        let mut back = vec![0; n];
        for (i, &j) in map.iter().enumerate() {
            back[j - 1] = i + 1;
        }
        let mut low: Vec<VarSet> = poset
            .elements()
            .iter()
            .filter(|e| e.len() <= d)
            .map(|e| e.relabel(&map))
            .collect();
        low.sort();
        let mut search = ExactCover::new(n, d, &low, deadline);
        search.node_limit = RESTART_NODES * luby(round + 1);
        let solved = search.solve();
        nodes += search.nodes;
        match solved {
            Some(true) => {
                let mut intervals: Vec<Interval> = search
                    .chosen
                    .iter()
                    .map(|iv| Interval::new(iv.lower.relabel(&back), iv.upper.relabel(&back)))
                    .collect();
                intervals.extend(
                    poset
                        .elements()
                        .iter()
                        .filter(|e| e.len() > d)
                        .map(|&e| Interval::new(e, e)),
                );
                let partition = IntervalPartition { intervals };
                assert!(
                    verify_partition(poset, &partition),
                    "search produced an invalid partition"
                );
                return SearchOutcome::Feasible { partition };
            }
            Some(false) => return SearchOutcome::Infeasible,
            None => {}
        }
    }
    SearchOutcome::Unknown {
        elapsed_ms: started.elapsed().as_millis() as u64,
        nodes,
    }
}

/// Luby's sequence 1, 1, 2, 1, 1, 2, 4, ...
fn luby(mut i: u64) -> u64 {
    loop {
        let mut k = 1;
        while (1u64 << k) - 1 < i {
            k += 1;
        }
        if (1u64 << k) - 1 == i {
            return 1 << (k - 1);
        }
        i -= (1u64 << (k - 1)) - 1;
    }
}
