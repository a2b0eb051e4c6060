//! Brute-force metric computation by listing every temporal path.
//!
//! Shares nothing with the scanning code in `metrics`: it walks all simple
//! paths of up to n−1 hops with every admissible label choice and keeps the
//! best arrival, duration and hop count per target.

use crate::dist::Dist;
use crate::error::{Error, Result};
use crate::graph::TemporalGraph;
use crate::matrix::DistanceMatrix;
use crate::metrics::{default_horizon, Metric, Strictness};

/// Size limits for [`oracle_metric`], checked on the unrolled graph.
#[derive(Clone, Copy, Debug)]
pub struct EnumerationGuard {
    pub max_vertices: usize,
    pub max_labels: usize,
}

impl Default for EnumerationGuard {
    fn default() -> Self {
        EnumerationGuard { max_vertices: 8, max_labels: 40 }
    }
}

struct Walker<'a> {
    adj: &'a [Vec<(usize, &'a [u64])>],
    strictness: Strictness,
    arrival: Vec<u64>,
    duration: Vec<u64>,
    hops: Vec<u64>,
}

impl Walker<'_> {
    fn walk(&mut self, at: usize, last: u64, first: u64, len: u64, visited: u64) {
        for &(w, labels) in &self.adj[at] {
            if visited & (1 << w) != 0 {
                continue;
            }
            for &t in labels {
                let ok = len == 0
                    || match self.strictness {
                        Strictness::Strict => t > last,
                        Strictness::NonStrict => t >= last,
                    };
                if !ok {
                    continue;
                }
                let first = if len == 0 { t } else { first };
                self.arrival[w] = self.arrival[w].min(t);
                self.duration[w] = self.duration[w].min(t - first + 1);
                self.hops[w] = self.hops[w].min(len + 1);
                self.walk(w, t, first, len + 1, visited | (1 << w));
            }
        }
    }
}

/// The distance matrix of `g` under `metric`, by exhaustive path listing.
/// Periodic graphs are unrolled over the default horizon first.
pub fn oracle_metric(
    g: &TemporalGraph,
    metric: Metric,
    strictness: Strictness,
    guard: EnumerationGuard,
) -> Result<DistanceMatrix> {
    let n = g.n();
    if n > guard.max_vertices || n > 64 {
        return Err(Error::Guard(format!("{n} vertices, limit {}", guard.max_vertices)));
    }
    let flat = match default_horizon(g, metric) {
        Some(h) => g.unroll(h),
        None => g.clone(),
    };
    if flat.label_count() > guard.max_labels {
        return Err(Error::Guard(format!("{} labels, limit {}", flat.label_count(), guard.max_labels)));
    }
    let mut adj: Vec<Vec<(usize, &[u64])>> = vec![Vec::new(); n];
    for (u, v, labels) in flat.edges() {
        adj[u].push((v, labels));
        adj[v].push((u, labels));
    }
    let mut rows = Vec::with_capacity(n);
    for s in 0..n {
        let mut w = Walker {
            adj: &adj,
            strictness,
            arrival: vec![u64::MAX; n],
            duration: vec![u64::MAX; n],
            hops: vec![u64::MAX; n],
        };
        w.walk(s, 0, 0, 0, 1 << s);
        let best = match metric {
            Metric::Foremost => w.arrival,
            Metric::Fastest => w.duration,
            Metric::Shortest => w.hops,
        };
        rows.push((0..n).map(|v| if v == s { Dist::ZERO } else { Dist::from_raw(best[v]) }).collect());
    }
    DistanceMatrix::from_rows(rows)
}
