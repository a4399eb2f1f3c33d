//! Built-in examples and seeded generators.

pub mod corpus;
mod random;
mod realize;

pub use corpus::{corpus, CORPUS_NAMES, RP2_FACETS};
pub use random::{random_concatenation, random_ideal, Concatenation, GenSpec, Generated, Target, ATTEMPT_CAP};
pub use realize::{realize_graph, realize_with_blocks};
