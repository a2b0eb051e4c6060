//! Temporal graphs, their distance matrices, and the plain-text formats used
//! to exchange them.
//!
//! Vertices are `0..n` in this API and `1..=n` in files and printed output.

pub mod cnf;
pub mod dist;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod io;
pub mod matrix;
pub mod metrics;
pub mod random;
pub mod range;
pub mod verify;

pub use cnf::{Assignment, CnfFormula};
pub use dist::{Dist, Finite, Inf};
pub use enumerate::{oracle_metric, EnumerationGuard};
pub use error::{Error, Result};
pub use graph::{canonical_residue, StaticGraph, TemporalGraph};
pub use matrix::DistanceMatrix;
pub use metrics::{
    fastest_matrix, foremost_matrix, metric_matrix, shortest_matrix, Metric, Strictness, TimeOrderedEdges,
};
pub use range::{Range, RangeMatrix};
pub use verify::{verify_ranged, verify_realization, Mismatch, VerifyReport};
