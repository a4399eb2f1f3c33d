//! Depth read off the prime-sum graph.
//!
//! After discarding free variables the ideal lives in the polynomial ring on
//! its support. There, with bigsize at most two, `depth S/I` is 1 exactly
//! when the graph is a join, `1 + q` (for `q > 1`) exactly when the
//! complement of the graph is a spanning path, and 2 otherwise.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::PrimeSumGraph;
use crate::ideal::SquarefreeIdeal;
use crate::varset::VarSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// One prime: `S/I` restricted to the support is the residue field.
    SinglePrime,
    JoinSplit {
        left: VarSet,
        right: VarSet,
    },
    ChainOfPairs {
        order: Vec<usize>,
    },
    Fallback {
        witness: FallbackWitness,
    },
}

/// Why neither the join nor the chain rule applies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FallbackWitness {
    /// Some pair misses exactly one variable, so `1 + q = 2`.
    UnitDeficit { pair: (usize, usize) },
    /// A vertex of complement degree at least three.
    BranchVertex { vertex: usize, degree: usize },
    /// The complement is a single cycle.
    ComplementCycle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthVerdict {
    pub applicable: bool,
    pub reason: Option<String>,
    /// `depth S/I` over the full ring.
    pub module_depth: Option<usize>,
    pub ideal_depth: Option<usize>,
    /// `depth S/I` over the ring on the support.
    pub reduced_module_depth: Option<usize>,
    pub certificate: Option<Certificate>,
    /// Number of variables outside the support.
    pub free_var_adjustment: usize,
    pub reduced_bigsize: usize,
    /// Smallest deficit inside the support.
    pub q: Option<usize>,
}

impl DepthVerdict {
    fn decided(
        reduced: usize,
        certificate: Certificate,
        free: usize,
        reduced_bigsize: usize,
        q: Option<usize>,
    ) -> Self {
        DepthVerdict {
            applicable: true,
            reason: None,
            module_depth: Some(reduced + free),
            ideal_depth: Some(reduced + free + 1),
            reduced_module_depth: Some(reduced),
            certificate: Some(certificate),
            free_var_adjustment: free,
            reduced_bigsize,
            q,
        }
    }
}

pub fn depth_by_theorem(ideal: &SquarefreeIdeal) -> DepthVerdict {
    let free = ideal.free_variable_count();
    let profile = ideal.profile();
    let reduced_bigsize = profile.t - 1;
    let graph = PrimeSumGraph::build(ideal);
    let q = graph.min_deficit();

    if ideal.s() == 1 {
        return DepthVerdict::decided(0, Certificate::SinglePrime, free, reduced_bigsize, q);
    }
    if reduced_bigsize >= 3 {
        return DepthVerdict {
            applicable: false,
            reason: Some(format!("bigsize={reduced_bigsize}")),
            module_depth: None,
            ideal_depth: None,
            reduced_module_depth: None,
            certificate: None,
            free_var_adjustment: free,
            reduced_bigsize,
            q,
        };
    }
    if let Some((left, right)) = graph.join_split() {
        return DepthVerdict::decided(1, Certificate::JoinSplit { left, right }, free, reduced_bigsize, q);
    }
    // Not a join, so at least one non-edge exists and q is defined.
    let q_val = q.expect("a non-join graph has a non-edge");
    let path = graph.complement_spanning_path();
    if q_val > 1 {
        if let Some(order) = path {
            return DepthVerdict::decided(1 + q_val, Certificate::ChainOfPairs { order }, free, reduced_bigsize, q);
        }
    }
    let witness = fallback_witness(&graph, q_val);
    DepthVerdict::decided(2, Certificate::Fallback { witness }, free, reduced_bigsize, q)
}

fn fallback_witness(graph: &PrimeSumGraph, q: usize) -> FallbackWitness {
    if q == 1 {
        let (&pair, _) = graph
            .deficits()
            .iter()
            .find(|(_, d)| d.len() == 1)
            .expect("q = 1 is attained");
        return FallbackWitness::UnitDeficit { pair };
    }
    let co = graph.graph().complement();
    match (1..=co.vertex_count()).find(|&v| co.degree(v) >= 3) {
        Some(vertex) => FallbackWitness::BranchVertex {
            vertex,
            degree: co.degree(vertex),
        },
        None => FallbackWitness::ComplementCycle,
    }
}

/// `depth I = 2 + min(|P_a + P_b deficit|, |P_a + P_c deficit|)` for three
/// primes whose graph has a single edge `{b, c}`, plus free variables.
pub fn three_prime_formula(ideal: &SquarefreeIdeal) -> Result<usize> {
    if ideal.s() != 3 {
        return Err(Error::PreconditionViolated(format!(
            "expected 3 primes, got {}",
            ideal.s()
        )));
    }
    let graph = PrimeSumGraph::build(ideal);
    let edges = graph.edges();
    let &[(b, c)] = edges.as_slice() else {
        return Err(Error::PreconditionViolated(format!(
            "expected exactly one covering pair, got {}",
            edges.len()
        )));
    };
    let a = 6 - b - c;
    let d1 = graph.deficit(a, b).expect("non-edge").len();
    let d2 = graph.deficit(a, c).expect("non-edge").len();
    Ok(2 + d1.min(d2) + ideal.free_variable_count())
}
