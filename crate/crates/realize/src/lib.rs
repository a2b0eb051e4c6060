//! Deciding whether a matrix is the foremost matrix of some temporal graph,
//! and constructing such a graph.

pub mod compat;
pub mod foremost;
pub mod interval;
pub mod ranged;

pub use compat::{edge_compat, ns_edge_compat, period_edge_compat, prescribed_edge_compat};
pub use foremost::{
    realize_foremost, realize_ns_foremost, realize_periodic_foremost, realize_periodic_shortest,
    realize_prescribed_foremost, realize_prescribed_ns_foremost, CompatSearch, Outcome,
};
pub use interval::{violation_index, IntervalIndex};
pub use ranged::{
    range_edge_compat, range_ns_edge_compat, range_prescribed_edge_compat, realize_ranged_foremost, EntrySet,
    RangedOptions, RangedOutcome,
};
