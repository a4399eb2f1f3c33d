//! Multigraded Betti numbers of `S/I` from Hochster's formula, and depth
//! through Auslander–Buchsbaum.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::complex::SimplicialComplex;
use super::field::FieldSpec;
use crate::error::{Error, Result};
use crate::ideal::SquarefreeIdeal;
use crate::varset::VarSet;

/// Limits on the oracle's `2^n` subset sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_vars: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_vars: 16 }
    }
}

/// Nonzero `β_{i,σ}(S/I)`, keyed by `(i, σ)` in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub n: usize,
    pub field: FieldSpec,
    entries: BTreeMap<(usize, VarSet), usize>,
}

#[derive(Serialize)]
struct BettiEntry {
    i: usize,
    sigma: VarSet,
    value: usize,
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(
            self.entries
                .iter()
                .map(|(&(i, sigma), &value)| BettiEntry { i, sigma, value }),
        )
    }
}

impl BettiTable {
    pub fn get(&self, i: usize, sigma: VarSet) -> usize {
        self.entries.get(&(i, sigma)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, VarSet), usize> {
        &self.entries
    }

    /// Largest homological degree with a nonzero entry.
    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// `β_i = Σ_σ β_{i,σ}`.
    pub fn total(&self, i: usize) -> usize {
        self.entries
            .range((i, VarSet::empty())..)
            .take_while(|((j, _), _)| *j == i)
            .map(|(_, &v)| v)
            .sum()
    }

    /// Total Betti numbers `β_0, ..., β_pd`.
    pub fn totals(&self) -> Vec<usize> {
        (0..=self.projective_dimension()).map(|i| self.total(i)).collect()
    }
}

pub fn hochster_betti(ideal: &SquarefreeIdeal, field: FieldSpec, config: OracleConfig) -> Result<BettiTable> {
    let n = ideal.n();
    if n > config.max_vars {
        return Err(Error::BudgetExceeded(format!(
            "{n} variables exceeds the oracle cap of {}",
            config.max_vars
        )));
    }
    let delta = SimplicialComplex::stanley_reisner(ideal);
    let full = VarSet::full(n);
    let subsets: Vec<VarSet> = full.subsets().collect();
    let found: Vec<((usize, VarSet), usize)> = subsets
        .par_iter()
        .flat_map_iter(|&sigma| betti_at(&delta, sigma, field))
        .collect();
    Ok(BettiTable {
        n,
        field,
        entries: found.into_iter().collect(),
    })
}

/// Entries `((i, σ), β_{i,σ})` contributed by one multidegree.
fn betti_at(delta: &SimplicialComplex, sigma: VarSet, field: FieldSpec) -> Vec<((usize, VarSet), usize)> {
    let induced = delta.induced(sigma);
    if induced.cone_apex().is_some() {
        return Vec::new();
    }
    induced
        .reduced_homology(field)
        .dims
        .into_iter()
        .enumerate()
        .filter(|&(_, d)| d > 0)
        // Index k + 1 holds H̃_k, and i = |σ| - k - 1.
        .map(|(idx, d)| ((sigma.len() - idx, sigma), d))
        .collect()
}

/// Depths of `S/I` and of `I` from the Betti table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OracleDepth {
    pub field: FieldSpec,
    pub projective_dimension: usize,
    pub module_depth: usize,
    pub ideal_depth: usize,
}

pub fn depth_oracle(ideal: &SquarefreeIdeal, field: FieldSpec) -> Result<OracleDepth> {
    depth_oracle_with(ideal, field, OracleConfig::default())
}

pub fn depth_oracle_with(ideal: &SquarefreeIdeal, field: FieldSpec, config: OracleConfig) -> Result<OracleDepth> {
    let table = hochster_betti(ideal, field, config)?;
    Ok(depth_from_table(ideal, &table))
}

pub fn depth_from_table(ideal: &SquarefreeIdeal, table: &BettiTable) -> OracleDepth {
    let support = ideal.support();
    // Free variables are cone points of every induced subcomplex that
    // contains them, so every multidegree must sit inside the support; this
    // is what makes depth additive under support reduction.
    assert!(
        table.entries().keys().all(|&(_, sigma)| sigma.is_subset(support)),
        "Betti multidegree outside the support"
    );
    let pd = table.projective_dimension();
    let module_depth = ideal.n() - pd;
    OracleDepth {
        field: table.field,
        projective_dimension: pd,
        module_depth,
        ideal_depth: module_depth + 1,
    }
}
