//! Homological depth oracle: Stanley–Reisner complexes, exact reduced
//! homology and Hochster's formula.

mod betti;
mod complex;
mod field;
mod linalg;

pub use betti::{
    depth_from_table, depth_oracle, depth_oracle_with, hochster_betti, BettiTable, OracleConfig, OracleDepth,
};
pub use complex::{ComplexCheck, ReducedHomology, SimplicialComplex};
pub use field::FieldSpec;
pub use linalg::IntMatrix;
