use std::fmt;

use crate::dist::Dist;
use crate::error::{Error, Result};
use crate::graph::TemporalGraph;
use crate::matrix::DistanceMatrix;
use crate::metrics::{metric_matrix, Metric, Strictness};
use crate::range::{Range, RangeMatrix};

/// One differing entry; `u` and `v` are 0-based, printed 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Mismatch<E> {
    pub u: usize,
    pub v: usize,
    pub expected: E,
    pub got: Dist,
}

impl<E: fmt::Display> fmt::Display for Mismatch<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{}) expected {} got {}", self.u + 1, self.v + 1, self.expected, self.got)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport<E = Dist> {
    /// Row-major.
    pub mismatches: Vec<Mismatch<E>>,
    pub label_count: usize,
    pub max_labels_per_edge: usize,
}

impl<E> VerifyReport<E> {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl<E: fmt::Display> fmt::Display for VerifyReport<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.mismatches {
            writeln!(f, "mismatch {m}")?;
        }
        write!(
            f,
            "{} mismatches, {} labels, at most {} per edge",
            self.mismatches.len(),
            self.label_count,
            self.max_labels_per_edge
        )
    }
}

fn check_dims(g: &TemporalGraph, n: usize) -> Result<()> {
    if g.n() != n {
        return Err(Error::DimensionMismatch { expected: n, got: g.n() });
    }
    Ok(())
}

/// Compares the metric matrix of `g` with `d` entry by entry.
pub fn verify_realization(
    g: &TemporalGraph,
    d: &DistanceMatrix,
    metric: Metric,
    strictness: Strictness,
) -> Result<VerifyReport> {
    check_dims(g, d.n())?;
    let got = metric_matrix(g, metric, strictness, None);
    let mismatches = (0..d.n())
        .flat_map(|u| (0..d.n()).map(move |v| (u, v)))
        .filter(|&(u, v)| got.get(u, v) != d.get(u, v))
        .map(|(u, v)| Mismatch { u, v, expected: d.get(u, v), got: got.get(u, v) })
        .collect();
    Ok(VerifyReport { mismatches, label_count: g.label_count(), max_labels_per_edge: g.max_labels_per_edge() })
}

/// Checks that every strict foremost entry of `g` lies in its range.
pub fn verify_ranged(g: &TemporalGraph, r: &RangeMatrix) -> Result<VerifyReport<Range>> {
    check_dims(g, r.n())?;
    let got = metric_matrix(g, Metric::Foremost, Strictness::Strict, None);
    let mismatches = (0..r.n())
        .flat_map(|u| (0..r.n()).map(move |v| (u, v)))
        .filter(|&(u, v)| !r.get(u, v).contains(got.get(u, v)))
        .map(|(u, v)| Mismatch { u, v, expected: r.get(u, v), got: got.get(u, v) })
        .collect();
    Ok(VerifyReport { mismatches, label_count: g.label_count(), max_labels_per_edge: g.max_labels_per_edge() })
}
