//! JSON report schema v1 and its plain-text rendering.

use std::fmt::Write;

use primegraph::homology::{depth_from_table, hochster_betti, FieldSpec, OracleConfig};
use primegraph::sdepth::{BranchBound, IntervalPartition, SplitBound};
use primegraph::{ConcatSplit, DepthVerdict, IdealJson, IdealProfile, PrimeSumGraph, SquarefreeIdeal, VarSet};
use serde::Serialize;

use crate::failure::Failure;

pub const SCHEMA: &str = "primegraph-report/v1";

#[derive(Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: &'static str,
    pub input: IdealJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<IdealProfile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem: Option<DepthVerdict>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub oracle: Vec<OracleSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sdepth: Option<SdepthSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub consistency: Option<Consistency>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

impl Report {
    pub fn new(command: &'static str, ideal: &SquarefreeIdeal) -> Self {
        Report {
            schema: SCHEMA,
            command,
            input: ideal.to_json(),
            profile: None,
            graph: None,
            theorem: None,
            oracle: Vec::new(),
            sdepth: None,
            consistency: None,
            timings: None,
        }
    }
}

#[derive(Serialize)]
pub struct Timings {
    pub total_ms: u64,
}

#[derive(Serialize)]
pub struct DeficitEntry {
    pub pair: (usize, usize),
    pub missing: VarSet,
}

#[derive(Serialize)]
pub struct JoinSection {
    pub left: VarSet,
    pub right: VarSet,
}

#[derive(Serialize)]
pub struct GraphSection {
    /// A single prime: no pairs, nothing to decide.
    pub trivial: bool,
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
    pub deficits: Vec<DeficitEntry>,
    pub join_split: Option<JoinSection>,
    pub good_vertices: VarSet,
    pub complement_path: Option<Vec<usize>>,
    pub concatenation_split: Option<ConcatSplit>,
}

impl GraphSection {
    pub fn build(graph: &PrimeSumGraph) -> Self {
        let trivial = graph.vertex_count() == 1;
        GraphSection {
            trivial,
            vertices: graph.vertex_count(),
            edges: graph.edges(),
            deficits: graph
                .deficits()
                .iter()
                .map(|(&pair, &missing)| DeficitEntry { pair, missing })
                .collect(),
            join_split: if trivial {
                None
            } else {
                graph.join_split().map(|(left, right)| JoinSection { left, right })
            },
            good_vertices: graph.good_vertices(),
            complement_path: graph.complement_spanning_path(),
            concatenation_split: graph.concatenation_split(),
        }
    }
}

#[derive(Serialize)]
pub struct OracleSection {
    pub characteristic: u64,
    pub projective_dimension: usize,
    pub module_depth: usize,
    pub ideal_depth: usize,
    /// Total Betti numbers `β_0 .. β_pd` of `S/I`.
    pub betti_totals: Vec<usize>,
}

pub fn run_oracle(ideal: &SquarefreeIdeal, field: FieldSpec) -> Result<OracleSection, Failure> {
    let table = hochster_betti(ideal, field, OracleConfig::default())?;
    let depth = depth_from_table(ideal, &table);
    Ok(OracleSection {
        characteristic: field.characteristic(),
        projective_dimension: depth.projective_dimension,
        module_depth: depth.module_depth,
        ideal_depth: depth.ideal_depth,
        betti_totals: table.totals(),
    })
}

#[derive(Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum SdepthSection {
    Exact {
        value: usize,
        certificate: IntervalPartition,
    },
    AtLeast {
        target: usize,
        status: &'static str,
        #[serde(skip_serializing_if = "Option::is_none")]
        certificate: Option<IntervalPartition>,
    },
    Bounds {
        hpv: usize,
        lower_bound: usize,
        best_split: Option<usize>,
        splits: Vec<SplitEntry>,
    },
}

#[derive(Serialize)]
pub struct SplitEntry {
    pub variable: usize,
    pub value: usize,
    pub restricted: BranchBound,
    pub colon: BranchBound,
}

impl From<SplitBound> for SplitEntry {
    fn from(b: SplitBound) -> Self {
        SplitEntry {
            variable: b.variable,
            value: b.value,
            restricted: b.restricted,
            colon: b.colon,
        }
    }
}

#[derive(Serialize, Default)]
pub struct Consistency {
    /// Oracle depths differ between the characteristics that were run.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub characteristic_disagreement: Option<bool>,
    /// Theorem verdict equals every oracle result (when applicable).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem_matches_oracle: Option<bool>,
}

fn set_list(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Plain-text rendering of whichever sections are present.
pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "ideal: n={} s={}", report.input.n, report.input.primes.len());
    for (k, p) in report.input.primes.iter().enumerate() {
        let _ = writeln!(out, "  P{} = {{{}}}", k + 1, set_list(p));
    }
    if let Some(p) = &report.profile {
        let q = p.q.map_or("none".to_string(), |q| q.to_string());
        let _ = writeln!(
            out,
            "profile: size={} bigsize={} q={} support={} h={}",
            p.size, p.bigsize, q, p.support, p.h
        );
    }
    if let Some(g) = &report.graph {
        if g.trivial {
            let _ = writeln!(out, "graph: trivial (one prime)");
        } else {
            let edges: Vec<String> = g.edges.iter().map(|(i, j)| format!("{i}{j}")).collect();
            let _ = writeln!(
                out,
                "graph: edges {}",
                if edges.is_empty() {
                    "none".into()
                } else {
                    edges.join(" ")
                }
            );
            for d in &g.deficits {
                let _ = writeln!(out, "  non-edge {}{} misses {}", d.pair.0, d.pair.1, d.missing);
            }
            match &g.join_split {
                Some(j) => {
                    let _ = writeln!(out, "  join: {} + {}", j.left, j.right);
                }
                None => {
                    let _ = writeln!(out, "  join: no");
                }
            }
            let _ = writeln!(out, "  good vertices: {}", g.good_vertices);
            if let Some(path) = &g.complement_path {
                let _ = writeln!(out, "  complement path: {}", set_list(path));
            }
            if let Some(c) = &g.concatenation_split {
                let _ = writeln!(out, "  concatenation in {}: {} and {}", c.vertex, c.left, c.right);
            }
        }
    }
    if let Some(v) = &report.theorem {
        if v.applicable {
            let _ = writeln!(
                out,
                "theorem: depth S/I = {}, depth I = {} ({})",
                v.module_depth.unwrap_or_default(),
                v.ideal_depth.unwrap_or_default(),
                v.certificate
                    .as_ref()
                    .map(|c| serde_json::to_string(c).unwrap_or_default())
                    .unwrap_or_default()
            );
        } else {
            let _ = writeln!(
                out,
                "theorem: not applicable ({})",
                v.reason.clone().unwrap_or_default()
            );
        }
    }
    for o in &report.oracle {
        let field = if o.characteristic == 0 {
            "QQ".to_string()
        } else {
            format!("GF({})", o.characteristic)
        };
        let _ = writeln!(
            out,
            "oracle over {field}: depth S/I = {}, depth I = {}, pd = {}, betti {:?}",
            o.module_depth, o.ideal_depth, o.projective_dimension, o.betti_totals
        );
    }
    if let Some(c) = &report.consistency {
        if let Some(d) = c.characteristic_disagreement {
            let _ = writeln!(out, "characteristic disagreement: {d}");
        }
        if let Some(m) = c.theorem_matches_oracle {
            let _ = writeln!(out, "theorem matches oracle: {m}");
        }
    }
    match &report.sdepth {
        Some(SdepthSection::Exact { value, certificate }) => {
            let _ = writeln!(out, "sdepth = {value} ({} intervals)", certificate.intervals.len());
            for iv in &certificate.intervals {
                let _ = writeln!(out, "  [{}, {}]", iv.lower, iv.upper);
            }
        }
        Some(SdepthSection::AtLeast { target, status, .. }) => {
            let _ = writeln!(out, "sdepth >= {target}: {status}");
        }
        Some(SdepthSection::Bounds {
            hpv,
            lower_bound,
            best_split,
            splits,
        }) => {
            let _ = writeln!(
                out,
                "sdepth >= {lower_bound} (1 + size = {hpv}, best split {best_split:?})"
            );
            for s in splits {
                let _ = writeln!(out, "  split at x{}: {}", s.variable, s.value);
            }
        }
        None => {}
    }
    if let Some(t) = &report.timings {
        let _ = writeln!(out, "elapsed: {} ms", t.total_ms);
    }
    out
}
