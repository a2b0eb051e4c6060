//! Foremost, fastest and shortest distance matrices.
//!
//! All three are computed per source by scanning the labels in time order.
//! Periodic graphs are unrolled over a finite horizon first: `n·Δ` for
//! foremost and shortest, `n·Δ + Δ` for fastest (whose departures are then
//! restricted to the first period).

use rayon::prelude::*;

use crate::dist::Dist;
use crate::graph::TemporalGraph;
use crate::matrix::DistanceMatrix;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Strictness {
    /// Consecutive labels on a path strictly increase.
    #[default]
    Strict,
    /// Consecutive labels on a path may repeat.
    NonStrict,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Metric {
    /// Earliest arrival time.
    Foremost,
    /// Minimum duration `τ_last − τ_first + 1`.
    Fastest,
    /// Minimum number of edges.
    Shortest,
}

/// Rows are computed on the rayon pool from this size up.
const PAR_THRESHOLD: usize = 32;

/// Labels of an aperiodic graph as `(τ, u, v)` triples sorted by time, plus
/// the boundaries of equal-time groups.
#[derive(Clone, Debug)]
pub struct TimeOrderedEdges {
    n: usize,
    edges: Vec<(u64, usize, usize)>,
    /// `(τ, start, end)` ranges into `edges`.
    groups: Vec<(u64, usize, usize)>,
}

impl TimeOrderedEdges {
    pub fn new(n: usize, mut edges: Vec<(u64, usize, usize)>) -> Self {
        edges.sort_unstable();
        let mut groups = Vec::new();
        let mut i = 0;
        while i < edges.len() {
            let t = edges[i].0;
            let mut j = i;
            while j < edges.len() && edges[j].0 == t {
                j += 1;
            }
            groups.push((t, i, j));
            i = j;
        }
        TimeOrderedEdges { n, edges, groups }
    }

    /// Panics on a periodic graph; unroll it first.
    pub fn from_graph(g: &TemporalGraph) -> Self {
        assert!(g.period().is_none(), "unroll periodic graphs before scanning");
        Self::new(g.n(), g.temporal_edges())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Earliest arrival at every vertex from `s`, leaving `s` no earlier than
    /// `depart` (≥ 1). Unreached vertices hold `u64::MAX`; `s` itself holds
    /// its ready time, which callers ignore.
    pub fn earliest_arrival(&self, s: usize, depart: u64, strictness: Strictness, arr: &mut [u64]) {
        arr.fill(u64::MAX);
        // A label τ is usable from u iff arr[u] < τ (strict) or arr[u] ≤ τ.
        arr[s] = match strictness {
            Strictness::Strict => depart - 1,
            Strictness::NonStrict => depart,
        };
        let first = self.groups.partition_point(|g| g.0 < depart);
        for &(t, lo, hi) in &self.groups[first..] {
            let group = &self.edges[lo..hi];
            match strictness {
                Strictness::Strict => {
                    for &(_, u, v) in group {
                        if arr[u] < t && arr[v] > t {
                            arr[v] = t;
                        } else if arr[v] < t && arr[u] > t {
                            arr[u] = t;
                        }
                    }
                }
                Strictness::NonStrict => loop {
                    let mut changed = false;
                    for &(_, u, v) in group {
                        if arr[u] <= t && arr[v] > t {
                            arr[v] = t;
                            changed = true;
                        } else if arr[v] <= t && arr[u] > t {
                            arr[u] = t;
                            changed = true;
                        }
                    }
                    if !changed {
                        break;
                    }
                },
            }
        }
    }

    pub fn foremost_row(&self, s: usize, strictness: Strictness) -> Vec<Dist> {
        let mut arr = vec![0; self.n];
        self.earliest_arrival(s, 1, strictness, &mut arr);
        arr[s] = 0;
        arr.into_iter().map(Dist::from_raw).collect()
    }

    /// Row-major foremost matrix with `u64::MAX` for unreachable, computed
    /// on the calling thread. Meant for search loops over tiny graphs.
    pub fn foremost_raw(&self, strictness: Strictness) -> Vec<u64> {
        let n = self.n;
        let mut out = vec![0; n * n];
        for s in 0..n {
            let row = &mut out[s * n..(s + 1) * n];
            self.earliest_arrival(s, 1, strictness, row);
            row[s] = 0;
        }
        out
    }

    /// Minimum duration from `s`, over departures at labels incident to `s`
    /// that are ≤ `last_departure`.
    pub fn fastest_row(&self, s: usize, strictness: Strictness, last_departure: u64) -> Vec<Dist> {
        let mut departures: Vec<u64> =
            self.edges.iter().filter(|&&(t, u, v)| (u == s || v == s) && t <= last_departure).map(|e| e.0).collect();
        departures.dedup();
        let mut best = vec![u64::MAX; self.n];
        let mut arr = vec![0; self.n];
        for &t0 in &departures {
            self.earliest_arrival(s, t0, strictness, &mut arr);
            for v in 0..self.n {
                if v != s && arr[v] != u64::MAX {
                    best[v] = best[v].min(arr[v] - t0 + 1);
                }
            }
        }
        best[s] = 0;
        best.into_iter().map(Dist::from_raw).collect()
    }

    /// Minimum hop count from `s`: round h relaxes every label once against
    /// the earliest arrivals found with at most h−1 hops.
    pub fn shortest_row(&self, s: usize, strictness: Strictness) -> Vec<Dist> {
        let n = self.n;
        let mut hops = vec![Dist::Inf; n];
        hops[s] = Dist::ZERO;
        let mut prev = vec![u64::MAX; n];
        prev[s] = 0;
        let usable = |a: u64, t: u64| match strictness {
            Strictness::Strict => a < t,
            Strictness::NonStrict => a <= t,
        };
        for h in 1..n as u64 {
            let mut cur = prev.clone();
            for &(t, u, v) in &self.edges {
                if usable(prev[u], t) && t < cur[v] {
                    cur[v] = t;
                }
                if usable(prev[v], t) && t < cur[u] {
                    cur[u] = t;
                }
            }
            if cur == prev {
                break;
            }
            for v in 0..n {
                if cur[v] != u64::MAX && hops[v] == Dist::Inf {
                    hops[v] = Dist::Finite(h);
                }
            }
            prev = cur;
        }
        hops
    }
}

/// The horizon used for a periodic graph when none is given.
pub fn default_horizon(g: &TemporalGraph, metric: Metric) -> Option<u64> {
    let p = g.period()?;
    let base = (g.n() as u64).max(1).saturating_mul(p);
    Some(match metric {
        Metric::Foremost | Metric::Shortest => base,
        Metric::Fastest => base.saturating_add(p),
    })
}

fn build_rows(n: usize, f: impl Fn(usize) -> Vec<Dist> + Sync) -> DistanceMatrix {
    let rows: Vec<Vec<Dist>> =
        if n >= PAR_THRESHOLD { (0..n).into_par_iter().map(&f).collect() } else { (0..n).map(f).collect() };
    DistanceMatrix::from_rows(rows).expect("metric rows form a valid matrix")
}

/// The distance matrix of `g` under `metric`. `horizon` truncates the label
/// set (and overrides the default horizon of a periodic graph).
pub fn metric_matrix(
    g: &TemporalGraph,
    metric: Metric,
    strictness: Strictness,
    horizon: Option<u64>,
) -> DistanceMatrix {
    let horizon = horizon.or_else(|| default_horizon(g, metric));
    let edges = match horizon {
        Some(h) => TimeOrderedEdges::from_graph(&g.unroll(h)),
        None => TimeOrderedEdges::from_graph(g),
    };
    let n = g.n();
    match metric {
        Metric::Foremost => build_rows(n, |s| edges.foremost_row(s, strictness)),
        Metric::Shortest => build_rows(n, |s| edges.shortest_row(s, strictness)),
        Metric::Fastest => {
            let last = g.period().unwrap_or(u64::MAX);
            build_rows(n, |s| edges.fastest_row(s, strictness, last))
        }
    }
}

pub fn foremost_matrix(g: &TemporalGraph, strictness: Strictness) -> DistanceMatrix {
    metric_matrix(g, Metric::Foremost, strictness, None)
}

pub fn fastest_matrix(g: &TemporalGraph, strictness: Strictness) -> DistanceMatrix {
    metric_matrix(g, Metric::Fastest, strictness, None)
}

pub fn shortest_matrix(g: &TemporalGraph, strictness: Strictness) -> DistanceMatrix {
    metric_matrix(g, Metric::Shortest, strictness, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dist::{Finite, Inf};

    fn graph(n: usize, labels: &[(usize, usize, &[u64])]) -> TemporalGraph {
        let mut g = TemporalGraph::new(n);
        for &(u, v, ts) in labels {
            for &t in ts {
                g.add_label(u, v, t).unwrap();
            }
        }
        g
    }

    #[test]
    fn three_vertex_star_foremost() {
        let g = graph(3, &[(0, 1, &[6, 11]), (0, 2, &[9])]);
        let d = foremost_matrix(&g, Strictness::Strict);
        let want = DistanceMatrix::from_options(&[
            vec![Some(0), Some(6), Some(9)],
            vec![Some(6), Some(0), Some(9)],
            vec![Some(9), Some(11), Some(0)],
        ])
        .unwrap();
        assert_eq!(d, want);
    }

    #[test]
    fn equal_labels_chain_only_when_non_strict() {
        let g = graph(3, &[(0, 1, &[5]), (1, 2, &[5])]);
        assert_eq!(foremost_matrix(&g, Strictness::NonStrict).get(0, 2), Finite(5));
        assert_eq!(foremost_matrix(&g, Strictness::Strict).get(0, 2), Inf);
    }

    #[test]
    fn fastest_prefers_late_departure() {
        let g = graph(3, &[(0, 1, &[1, 8]), (1, 2, &[9])]);
        let d = fastest_matrix(&g, Strictness::Strict);
        assert_eq!(d.get(0, 2), Finite(2));
        assert_eq!(d.get(0, 1), Finite(1));
        assert_eq!(d.get(2, 0), Inf);
        assert_eq!(foremost_matrix(&g, Strictness::Strict).get(0, 2), Finite(9));
    }

    #[test]
    fn shortest_counts_hops_not_time() {
        // 0-1-2 early, 0-2 directly only late.
        let g = graph(3, &[(0, 1, &[1]), (1, 2, &[2]), (0, 2, &[50])]);
        let d = shortest_matrix(&g, Strictness::Strict);
        assert_eq!(d.get(0, 2), Finite(1));
        let g = graph(4, &[(0, 1, &[1]), (1, 2, &[2]), (2, 3, &[3]), (1, 3, &[1])]);
        let d = shortest_matrix(&g, Strictness::Strict);
        // 0→1 at 1, then 1→3 at 1 is not increasing; the long way takes 3 hops.
        assert_eq!(d.get(0, 3), Finite(3));
        assert_eq!(shortest_matrix(&g, Strictness::NonStrict).get(0, 3), Finite(2));
    }

    #[test]
    fn periodic_graph_wraps_around() {
        let mut g = TemporalGraph::periodic(3, 4).unwrap();
        g.add_label(0, 1, 3).unwrap();
        g.add_label(1, 2, 2).unwrap();
        let d = foremost_matrix(&g, Strictness::Strict);
        assert_eq!(d.get(0, 2), Finite(6));
        assert_eq!(d.get(2, 0), Finite(3));
        // Departing 0 at 3 and arriving at 2 at 6.
        assert_eq!(fastest_matrix(&g, Strictness::Strict).get(0, 2), Finite(4));
        assert_eq!(shortest_matrix(&g, Strictness::Strict).get(0, 2), Finite(2));
        // A short horizon cuts the wrap.
        assert_eq!(metric_matrix(&g, Metric::Foremost, Strictness::Strict, Some(5)).get(0, 2), Inf);
    }
}
