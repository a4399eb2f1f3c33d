//! Stanley depth through interval partitions of the characteristic poset.

mod bounds;
mod construct;
mod cover;
mod poset;
mod search;

pub use bounds::{hpv_lower_bound, prime_sdepth, split_variable_bound, BoundMethod, BranchBound, SplitBound};
pub use poset::{verify_partition, CharPoset, Interval, IntervalPartition};
pub use search::{sdepth_at_least, sdepth_exact, ExactSdepth, SearchConfig, SearchOutcome};
