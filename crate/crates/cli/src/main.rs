mod failure;
mod input;
mod report;
mod verify;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use primegraph::gen::{corpus, random_ideal, GenSpec, Target};
use primegraph::homology::FieldSpec;
use primegraph::sdepth::{
    hpv_lower_bound, sdepth_at_least, sdepth_exact, split_variable_bound, SearchConfig, SearchOutcome,
};
use primegraph::{depth_by_theorem, Graph, PrimeSumGraph, SquarefreeIdeal};
use serde::Serialize;

use failure::Failure;
use report::{render_text, run_oracle, Consistency, GraphSection, Report, SdepthSection, Timings};
use verify::{minimize, random_cases, run_checks, Case, Counterexample};

#[derive(Parser)]
#[command(
    name = "primegraph",
    version,
    about = "Depth and Stanley depth of squarefree monomial ideals given by minimal primes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Output {
    /// Print the JSON report instead of text.
    #[arg(long)]
    json: bool,
    /// Leave out elapsed-time fields.
    #[arg(long)]
    stable: bool,
    /// Wall-clock budget in milliseconds.
    #[arg(long, default_value_t = 60_000)]
    budget_ms: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Profile, prime-sum graph and the graph-based depth verdict.
    Analyze {
        /// JSON ideal file or `corpus:NAME`.
        input: String,
        /// Write the prime-sum graph in DOT format to this path.
        #[arg(long)]
        dot: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Depth from Hochster's formula.
    Depth {
        input: String,
        /// Field characteristic: 0 or a prime.
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
        /// Run characteristics 0 and 2 and flag any disagreement.
        #[arg(long, conflicts_with = "characteristic")]
        all_chars: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Stanley depth: exact value, a threshold test, or lower bounds.
    Sdepth {
        input: String,
        /// Exact value with a certificate (the default).
        #[arg(long, group = "mode")]
        exact: bool,
        #[arg(long, group = "mode", value_name = "D")]
        at_least: Option<usize>,
        #[arg(long, group = "mode")]
        bounds: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Cross-check theorem, oracle and solver on one ideal or on seeded random ones.
    Verify {
        #[arg(required_unless_present = "random")]
        input: Option<String>,
        /// Number of random instances.
        #[arg(long, conflicts_with = "input")]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        s: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Write a built-in or generated ideal as JSON.
    Gen {
        #[arg(long, conflicts_with = "target")]
        corpus: Option<String>,
        #[arg(long, value_enum, required_unless_present = "corpus")]
        target: Option<TargetArg>,
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        s: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Edges of the graph for `--target graph`, e.g. "23" or "1-2,3-4".
        #[arg(long, default_value = "")]
        edges: String,
        /// Deficit block size for `--target graph`.
        #[arg(long, default_value_t = 1)]
        q: usize,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    Random,
    Bigsize2,
    Join,
    Chain,
    Graph,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("{failure}");
            failure.exit_code()
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    let started = Instant::now();
    match command {
        Command::Analyze { input, dot, out } => {
            let ideal = input::load_ideal(&input)?;
            let graph = PrimeSumGraph::build(&ideal);
            if let Some(path) = dot {
                fs::write(&path, graph.to_dot(true))
                    .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))?;
            }
            let mut report = Report::new("analyze", &ideal);
            report.profile = Some(ideal.profile());
            report.graph = Some(GraphSection::build(&graph));
            report.theorem = Some(depth_by_theorem(&ideal));
            emit(report, out, started)
        }
        Command::Depth {
            input,
            characteristic,
            all_chars,
            out,
        } => {
            let ideal = input::load_ideal(&input)?;
            let fields = if all_chars {
                vec![FieldSpec::RATIONALS, FieldSpec::GF2]
            } else {
                vec![FieldSpec::new(characteristic)?]
            };
            let mut report = Report::new("depth", &ideal);
            for field in fields {
                report.oracle.push(run_oracle(&ideal, field)?);
            }
            let verdict = depth_by_theorem(&ideal);
            let depths: Vec<usize> = report.oracle.iter().map(|o| o.ideal_depth).collect();
            report.consistency = Some(Consistency {
                characteristic_disagreement: all_chars.then(|| depths.windows(2).any(|w| w[0] != w[1])),
                theorem_matches_oracle: verdict.ideal_depth.map(|t| depths.iter().all(|&d| d == t)),
            });
            report.theorem = Some(verdict);
            emit(report, out, started)
        }
        Command::Sdepth {
            input,
            exact: _,
            at_least,
            bounds,
            out,
        } => {
            let ideal = input::load_ideal(&input)?;
            let config = SearchConfig::with_budget(Duration::from_millis(out.budget_ms));
            let section = if let Some(target) = at_least {
                let outcome = sdepth_at_least(&ideal, target, config)?;
                let (status, certificate) = match outcome {
                    SearchOutcome::Feasible { partition } => ("feasible", Some(partition)),
                    SearchOutcome::Infeasible => ("infeasible", None),
                    SearchOutcome::Unknown { .. } => ("unknown", None),
                };
                SdepthSection::AtLeast {
                    target,
                    status,
                    certificate,
                }
            } else if bounds {
                bounds_section(&ideal, out.budget_ms)?
            } else {
                let result = sdepth_exact(&ideal, config)?;
                SdepthSection::Exact {
                    value: result.value,
                    certificate: result.certificate,
                }
            };
            let mut report = Report::new("sdepth", &ideal);
            report.profile = Some(ideal.profile());
            report.sdepth = Some(section);
            emit(report, out, started)
        }
        Command::Verify {
            input,
            random,
            seed,
            n,
            s,
            out,
        } => {
            let cases = match (input, random) {
                (Some(path), _) => vec![(path.clone(), input::load_ideal(&path)?)],
                (None, Some(count)) => random_cases(count, seed, n, s)?,
                (None, None) => unreachable!("clap requires one of them"),
            };
            run_verify(cases, out, started)
        }
        Command::Gen {
            corpus: name,
            target,
            n,
            s,
            seed,
            edges,
            q,
            output,
        } => {
            let ideal = match (name, target) {
                (Some(name), _) => corpus(&name)?,
                (None, Some(target)) => {
                    let target = match target {
                        TargetArg::Random => Target::Random,
                        TargetArg::Bigsize2 => Target::Bigsize2,
                        TargetArg::Join => Target::Join,
                        TargetArg::Chain => Target::Chain,
                        TargetArg::Graph => {
                            let edges = input::parse_edges(&edges)?;
                            if let Some(&(_, j)) = edges.iter().find(|&&(_, j)| j > s) {
                                return Err(Failure::Input(format!("edge vertex {j} exceeds --s {s}")));
                            }
                            Target::Graph {
                                graph: Graph::from_edges(s, edges),
                                q,
                            }
                        }
                    };
                    random_ideal(&GenSpec::new(n, s, target, seed))?.ideal
                }
                (None, None) => unreachable!("clap requires one of them"),
            };
            write_ideal(&ideal, output)
        }
    }
}

fn bounds_section(ideal: &SquarefreeIdeal, budget_ms: u64) -> Result<SdepthSection, Failure> {
    let hpv = hpv_lower_bound(ideal);
    let support: Vec<usize> = ideal.support().to_vec();
    let share = Duration::from_millis(budget_ms / support.len().max(1) as u64);
    let mut splits = Vec::new();
    for &x in &support {
        let bound = split_variable_bound(ideal, x, 1, SearchConfig::with_budget(share))?;
        splits.push(report::SplitEntry::from(bound));
    }
    let best_split = splits.iter().map(|s| s.value).max();
    Ok(SdepthSection::Bounds {
        hpv,
        lower_bound: best_split.map_or(hpv, |b| b.max(hpv)),
        best_split,
        splits,
    })
}

fn write_ideal(ideal: &SquarefreeIdeal, output: Option<PathBuf>) -> Result<(), Failure> {
    let text = ideal.to_json_string() + "\n";
    match output {
        Some(path) => {
            fs::write(&path, text).map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))
        }
        None => {
            say(&text);
            Ok(())
        }
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn say(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn emit(mut report: Report, out: Output, started: Instant) -> Result<(), Failure> {
    if !out.stable {
        report.timings = Some(Timings {
            total_ms: started.elapsed().as_millis() as u64,
        });
    }
    if out.json {
        say(&(serde_json::to_string_pretty(&report).expect("reports serialize") + "\n"));
    } else {
        say(&render_text(&report));
    }
    Ok(())
}

#[derive(Serialize)]
struct VerifyReport {
    schema: &'static str,
    command: &'static str,
    passed: bool,
    cases: Vec<Case>,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    timings: Option<Timings>,
}

fn run_verify(cases: Vec<(String, SquarefreeIdeal)>, out: Output, started: Instant) -> Result<(), Failure> {
    let deadline = started + Duration::from_millis(out.budget_ms);
    let mut results = Vec::new();
    let mut counterexample = None;
    for (label, ideal) in cases {
        let checks = run_checks(&ideal, deadline)?;
        let case = Case {
            label,
            input: ideal.to_json(),
            checks,
        };
        if counterexample.is_none() {
            if let Some(bad) = case.failures().next() {
                // Minimization gets its own budget so a late failure is still reduced.
                let shrink_deadline = Instant::now() + Duration::from_millis(out.budget_ms);
                let minimized = minimize(&ideal, bad.name, shrink_deadline);
                counterexample = Some(Counterexample {
                    case: case.label.clone(),
                    check: bad.name,
                    detail: bad.detail.clone(),
                    original: ideal.to_json(),
                    minimized: minimized.to_json(),
                });
            }
        }
        results.push(case);
        if counterexample.is_some() {
            break;
        }
    }
    let passed = counterexample.is_none();
    let report = VerifyReport {
        schema: report::SCHEMA,
        command: "verify",
        passed,
        cases: results,
        counterexample,
        timings: (!out.stable).then(|| Timings {
            total_ms: started.elapsed().as_millis() as u64,
        }),
    };
    if out.json {
        say(&(serde_json::to_string_pretty(&report).expect("reports serialize") + "\n"));
    } else {
        for case in &report.cases {
            let run = case
                .checks
                .iter()
                .filter(|c| c.status != verify::Status::Skipped)
                .count();
            match case.failures().next() {
                None => say(&format!("{}: ok ({run} checks)\n", case.label)),
                Some(c) => say(&format!("{}: FAIL {} ({})\n", case.label, c.name, c.detail)),
            }
        }
        say(&format!("verify: {}\n", if passed { "PASS" } else { "FAIL" }));
    }
    match report.counterexample {
        None => Ok(()),
        Some(cx) => {
            let dump = serde_json::to_string(&cx.minimized).expect("ideals serialize");
            eprintln!("minimized counterexample for {}: {dump}", cx.check);
            Err(Failure::Inconsistent(format!("{} failed on {}", cx.check, cx.case)))
        }
    }
}
