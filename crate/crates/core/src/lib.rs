//! Squarefree monomial ideals given by their minimal primes: invariants,
//! the prime-sum graph, depth via graph structure and via Hochster's formula,
//! Stanley depth by interval partitions, and seeded instance generators.

pub mod error;
pub mod gen;
pub mod graph;
pub mod homology;
pub mod ideal;
pub mod sdepth;
pub mod theorem;
pub mod varset;

pub use error::{Error, Result};
pub use graph::{ConcatSplit, Graph, PrimeSumGraph};
pub use homology::{depth_oracle, hochster_betti, BettiTable, FieldSpec, OracleConfig, OracleDepth};
pub use ideal::{IdealJson, IdealProfile, SquarefreeIdeal};
pub use sdepth::{sdepth_at_least, sdepth_exact, split_variable_bound, SearchConfig, SearchOutcome};
pub use theorem::{depth_by_theorem, three_prime_formula, Certificate, DepthVerdict, FallbackWitness};
pub use varset::VarSet;
