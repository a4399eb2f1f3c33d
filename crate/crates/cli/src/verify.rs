//! The consistency suite behind `primegraph verify`.

use std::time::Instant;

use primegraph::gen::{random_concatenation, random_ideal, GenSpec, Target};
use primegraph::homology::{depth_oracle, FieldSpec};
use primegraph::sdepth::{hpv_lower_bound, sdepth_exact, CharPoset, SearchConfig};
use primegraph::{depth_by_theorem, IdealJson, PrimeSumGraph, SquarefreeIdeal};
use serde::Serialize;

use crate::failure::Failure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, ok: bool, detail: String) -> Self {
        let status = if ok { Status::Pass } else { Status::Fail };
        Check { name, status, detail }
    }

    fn skipped(name: &'static str, detail: impl Into<String>) -> Self {
        Check {
            name,
            status: Status::Skipped,
            detail: detail.into(),
        }
    }
}

#[derive(Serialize)]
pub struct Case {
    pub label: String,
    pub input: IdealJson,
    pub checks: Vec<Check>,
}

impl Case {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

#[derive(Serialize)]
pub struct Counterexample {
    pub case: String,
    pub check: &'static str,
    pub detail: String,
    pub original: IdealJson,
    pub minimized: IdealJson,
}

fn ideal_depth(ideal: &SquarefreeIdeal, field: FieldSpec) -> Result<usize, Failure> {
    Ok(depth_oracle(ideal, field)?.ideal_depth)
}

/// Runs every check that applies to `ideal`; checks that cannot run are
/// reported as skipped with the reason.
pub fn run_checks(ideal: &SquarefreeIdeal, deadline: Instant) -> Result<Vec<Check>, Failure> {
    let mut checks = Vec::new();
    let d0 = ideal_depth(ideal, FieldSpec::RATIONALS)?;
    let d2 = ideal_depth(ideal, FieldSpec::GF2)?;
    let profile = ideal.profile();
    let verdict = depth_by_theorem(ideal);

    checks.push(match verdict.ideal_depth {
        Some(t) => Check::new(
            "theorem_vs_oracle",
            t == d0 && t == d2,
            format!("theorem {t}, char 0 {d0}, char 2 {d2}"),
        ),
        None => Check::skipped(
            "theorem_vs_oracle",
            verdict.reason.clone().unwrap_or_else(|| "not applicable".into()),
        ),
    });
    let floor = 1 + profile.size;
    checks.push(Check::new(
        "depth_lower_bound",
        d0 >= floor && d2 >= floor,
        format!("depth {d0}/{d2} vs 1 + size = {floor}"),
    ));

    let config = SearchConfig::default();
    let poset_len = CharPoset::new(ideal, config.max_vars).map(|p| p.len()).ok();
    match poset_len {
        Some(len) if len <= config.max_exact_poset => {
            let remaining = deadline.saturating_duration_since(Instant::now());
            let exact = sdepth_exact(
                ideal,
                SearchConfig {
                    budget: remaining,
                    ..config
                },
            )?;
            let sd = exact.value;
            checks.push(Check::new(
                "sdepth_lower_bound",
                sd >= hpv_lower_bound(ideal),
                format!("sdepth {sd} vs 1 + size = {floor}"),
            ));
            checks.push(Check::new(
                "sdepth_vs_depth",
                sd >= d0.max(d2),
                format!("sdepth {sd}, depth {}", d0.max(d2)),
            ));
        }
        _ => {
            checks.push(Check::skipped("sdepth_lower_bound", "poset too large for exact search"));
            checks.push(Check::skipped("sdepth_vs_depth", "poset too large for exact search"));
        }
    }

    let graph = PrimeSumGraph::build(ideal);
    let splits = graph.graph().concatenation_splits();
    if verdict.reduced_bigsize == 2 && !splits.is_empty() {
        let mut ok = true;
        let mut parts = Vec::new();
        for split in &splits {
            let first = ideal_depth(&ideal.subfamily(&split.left.to_vec())?, FieldSpec::RATIONALS)?;
            let second = ideal_depth(&ideal.subfamily(&split.right.to_vec())?, FieldSpec::RATIONALS)?;
            ok &= d0 == first.min(second);
            parts.push(format!("at {}: min({first}, {second})", split.vertex));
        }
        checks.push(Check::new(
            "concatenation_law",
            ok,
            format!("depth {d0}; {}", parts.join("; ")),
        ));
    } else {
        checks.push(Check::skipped(
            "concatenation_law",
            "no concatenation split with bigsize 2",
        ));
    }
    if Instant::now() > deadline {
        return Err(Failure::Budget("verification ran past the time budget".into()));
    }
    Ok(checks)
}

fn still_fails(ideal: &SquarefreeIdeal, check: &str, deadline: Instant) -> bool {
    run_checks(ideal, deadline)
        .map(|cs| cs.iter().any(|c| c.name == check && c.status == Status::Fail))
        .unwrap_or(false)
}

/// Greedily drops primes and variables while `check` keeps failing.
pub fn minimize(ideal: &SquarefreeIdeal, check: &str, deadline: Instant) -> SquarefreeIdeal {
    let mut current = ideal.clone();
    loop {
        let mut candidates = Vec::new();
        if current.s() > 1 {
            for drop in 1..=current.s() {
                let keep: Vec<usize> = (1..=current.s()).filter(|&k| k != drop).collect();
                if let Ok(smaller) = current.subfamily(&keep) {
                    candidates.push(smaller);
                }
            }
        }
        for x in 1..=current.n() {
            if current.n() > 1 {
                if let Ok(Some(smaller)) = current.delete_variable(x) {
                    candidates.push(smaller);
                }
            }
        }
        let next = candidates
            .into_iter()
            .take_while(|_| Instant::now() < deadline)
            .find(|c| still_fails(c, check, deadline));
        match next {
            Some(smaller) => current = smaller,
            None => return current,
        }
    }
}

/// Seeded instances for `verify --random`, cycling through targets that
/// make sense for the requested shape.
pub fn random_cases(count: usize, seed: u64, n: usize, s: usize) -> Result<Vec<(String, SquarefreeIdeal)>, Failure> {
    let mut targets = vec![Target::Random];
    if s >= 3 {
        targets.extend([Target::Bigsize2, Target::Join]);
        if n > s {
            targets.push(Target::Chain);
        }
    }
    let mut cases = Vec::with_capacity(count);
    for i in 0..count {
        let target = targets[i % targets.len()].clone();
        let spec = GenSpec::new(n, s, target.clone(), seed.wrapping_add(i as u64));
        let ideal = random_ideal(&spec)?.ideal;
        cases.push((format!("random {i} ({target:?})"), ideal));
    }
    let concatenations = count.div_ceil(5);
    for i in 0..concatenations {
        let cat = random_concatenation(seed.wrapping_add(i as u64), 3, n.clamp(8, 12))?;
        cases.push((format!("concatenation {i}"), cat.ideal));
    }
    Ok(cases)
}
