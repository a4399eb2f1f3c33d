//! Constructive lower bounds on Stanley depth.

use std::time::Instant;

use serde::Serialize;

use super::poset::CharPoset;
use super::search::{at_least_on, sdepth_exact, SearchConfig, SearchOutcome};
use crate::error::{Error, Result};
use crate::ideal::SquarefreeIdeal;

/// `1 + size(I)`.
pub fn hpv_lower_bound(ideal: &SquarefreeIdeal) -> usize {
    1 + ideal.profile().size
}

/// Stanley depth of a monomial prime of height `h` in `n` variables:
/// `n - h + ⌈h/2⌉`.
pub fn prime_sdepth(n: usize, h: usize) -> usize {
    assert!(1 <= h && h <= n);
    n - h + h.div_ceil(2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundMethod {
    /// The branch is the zero space and imposes nothing.
    Zero,
    /// The branch is the whole polynomial ring.
    WholeRing,
    PrimeClosedForm,
    Exact,
    Search,
    Hpv,
    Split,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchBound {
    /// `None` for the zero branch.
    pub value: Option<usize>,
    pub method: BoundMethod,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitBound {
    pub variable: usize,
    pub value: usize,
    /// `I ∩ K[x_j : j ≠ variable]` in the ring without `variable`.
    pub restricted: BranchBound,
    /// `(I : x_variable)`.
    pub colon: BranchBound,
}

/// Lower bound from `I = (I ∩ S') ⊕ x·(I : x)` as vector spaces, where `S'`
/// omits `x`: `sdepth I ≥ min(sdepth_{S'} (I ∩ S'), sdepth (I : x))`.
///
/// `recursion` bounds how many further splits each branch may try.
pub fn split_variable_bound(
    ideal: &SquarefreeIdeal,
    x: usize,
    recursion: usize,
    config: SearchConfig,
) -> Result<SplitBound> {
    if !ideal.support().contains(x) {
        return Err(Error::UnknownVariable(x));
    }
    let deadline = Instant::now() + config.budget;
    split_with_deadline(ideal, x, recursion, config, deadline)
}

fn split_with_deadline(
    ideal: &SquarefreeIdeal,
    x: usize,
    recursion: usize,
    config: SearchConfig,
    deadline: Instant,
) -> Result<SplitBound> {
    let restricted = match ideal.delete_variable(x)? {
        None => BranchBound {
            value: None,
            method: BoundMethod::Zero,
        },
        Some(rest) => bound_ideal(&rest, recursion, config, deadline),
    };
    let colon = match ideal.colon(x)? {
        None => BranchBound {
            value: Some(ideal.n()),
            method: BoundMethod::WholeRing,
        },
        Some(c) => bound_ideal(&c, recursion, config, deadline),
    };
    let value = match (restricted.value, colon.value) {
        (Some(a), Some(b)) => a.min(b),
        (None, Some(b)) => b,
        (Some(a), None) => a,
        (None, None) => unreachable!("the colon branch is never zero"),
    };
    Ok(SplitBound {
        variable: x,
        value,
        restricted,
        colon,
    })
}

/// Best provable lower bound for a branch within the remaining time.
fn bound_ideal(ideal: &SquarefreeIdeal, recursion: usize, config: SearchConfig, deadline: Instant) -> BranchBound {
    if ideal.s() == 1 {
        return BranchBound {
            value: Some(prime_sdepth(ideal.n(), ideal.primes()[0].len())),
            method: BoundMethod::PrimeClosedForm,
        };
    }
    let hpv = hpv_lower_bound(ideal);
    let mut best = BranchBound {
        value: Some(hpv),
        method: BoundMethod::Hpv,
    };
    let remaining = deadline.saturating_duration_since(Instant::now());
    if let Ok(poset) = CharPoset::new(ideal, config.max_vars) {
        if poset.len() <= config.max_exact_poset {
            let exact_cfg = SearchConfig {
                budget: remaining,
                ..config
            };
            if let Ok(exact) = sdepth_exact(ideal, exact_cfg) {
                return BranchBound {
                    value: Some(exact.value),
                    method: BoundMethod::Exact,
                };
            }
        } else {
            // Climb from the HPV bound while partitions keep turning up.
            let mut d = hpv + 1;
            while d <= ideal.n() {
                match at_least_on(ideal, &poset, d, deadline) {
                    SearchOutcome::Feasible { .. } => {
                        best = BranchBound {
                            value: Some(d),
                            method: BoundMethod::Search,
                        };
                        d += 1;
                    }
                    _ => break,
                }
            }
        }
    }
    if recursion > 0 {
        for x in ideal.support().iter() {
            if Instant::now() >= deadline {
                break;
            }
            if let Ok(split) = split_with_deadline(ideal, x, recursion - 1, config, deadline) {
                if Some(split.value) > best.value {
                    best = BranchBound {
                        value: Some(split.value),
                        method: BoundMethod::Split,
                    };
                }
            }
        }
    }
    best
}
