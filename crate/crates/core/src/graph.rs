use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Maps a positive time onto its residue in `1..=period`.
pub fn canonical_residue(t: u64, period: u64) -> u64 {
    debug_assert!(t >= 1 && period >= 1);
    (t - 1) % period + 1
}

/// An undirected temporal graph: every unordered vertex pair carries a
/// strictly increasing list of positive labels. Pairs without labels are
/// not edges.
///
/// With a period Δ the labels are residues in `1..=Δ` and the graph stands
/// for its infinite unrolling `{τ + iΔ : i ≥ 0}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TemporalGraph {
    n: usize,
    period: Option<u64>,
    edges: BTreeMap<(usize, usize), Vec<u64>>,
}

impl TemporalGraph {
    pub fn new(n: usize) -> Self {
        TemporalGraph { n, period: None, edges: BTreeMap::new() }
    }

    pub fn periodic(n: usize, period: u64) -> Result<Self> {
        if period == 0 || period == u64::MAX {
            return Err(Error::InvalidGraph(format!("period must be positive, got {period}")));
        }
        Ok(TemporalGraph { n, period: Some(period), edges: BTreeMap::new() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn period(&self) -> Option<u64> {
        self.period
    }

    fn key(&self, u: usize, v: usize) -> Result<(usize, usize)> {
        if u == v {
            return Err(Error::InvalidGraph(format!("self-loop at vertex {}", u + 1)));
        }
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidGraph(format!("edge {{{},{}}} outside 1..={}", u + 1, v + 1, self.n)));
        }
        Ok((u.min(v), u.max(v)))
    }

    /// Adds `t` to the pair `{u, v}`. On a periodic graph `t` must already be a
    /// residue in `1..=Δ`. Returns false if the label was already present.
    pub fn add_label(&mut self, u: usize, v: usize, t: u64) -> Result<bool> {
        let key = self.key(u, v)?;
        if t == 0 || t == u64::MAX {
            return Err(Error::InvalidGraph(format!("label {t} on {{{},{}}} is not a positive time", u + 1, v + 1)));
        }
        if let Some(p) = self.period {
            if t > p {
                return Err(Error::InvalidGraph(format!(
                    "label {t} on {{{},{}}} exceeds the period {p}",
                    u + 1,
                    v + 1
                )));
            }
        }
        let labels = self.edges.entry(key).or_default();
        match labels.binary_search(&t) {
            Ok(_) => Ok(false),
            Err(pos) => {
                labels.insert(pos, t);
                Ok(true)
            }
        }
    }

    /// Like [`add_label`](Self::add_label) but folds `t` onto its residue first
    /// when the graph is periodic.
    pub fn add_time(&mut self, u: usize, v: usize, t: u64) -> Result<bool> {
        let t = match self.period {
            Some(p) if t >= 1 => canonical_residue(t, p),
            _ => t,
        };
        self.add_label(u, v, t)
    }

    pub fn labels(&self, u: usize, v: usize) -> &[u64] {
        self.edges.get(&(u.min(v), u.max(v))).map_or(&[], |l| l.as_slice())
    }

    /// Edges with at least one label, `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, &[u64])> + '_ {
        self.edges.iter().filter(|(_, l)| !l.is_empty()).map(|(&(u, v), l)| (u, v, l.as_slice()))
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    pub fn label_count(&self) -> usize {
        self.edges.values().map(Vec::len).sum()
    }

    pub fn max_labels_per_edge(&self) -> usize {
        self.edges.values().map(Vec::len).max().unwrap_or(0)
    }

    pub fn underlying(&self) -> StaticGraph {
        let mut g = StaticGraph::new(self.n);
        for (u, v, _) in self.edges() {
            g.add_edge(u, v).expect("temporal edges are valid static edges");
        }
        g
    }

    /// Every `(t, u, v)` with `u < v`, sorted by time then pair.
    pub fn temporal_edges(&self) -> Vec<(u64, usize, usize)> {
        let mut out: Vec<(u64, usize, usize)> =
            self.edges().flat_map(|(u, v, l)| l.iter().map(move |&t| (t, u, v))).collect();
        out.sort_unstable();
        out
    }

    /// The aperiodic graph holding every label ≤ `horizon`. For a periodic
    /// graph this expands each residue into `τ, τ + Δ, …`.
    pub fn unroll(&self, horizon: u64) -> TemporalGraph {
        let mut g = TemporalGraph::new(self.n);
        for (u, v, labels) in self.edges() {
            let mut times: Vec<u64> = match self.period {
                None => labels.iter().copied().filter(|&t| t <= horizon).collect(),
                Some(p) => {
                    labels.iter().flat_map(|&t| (0..).map(move |i| t + i * p).take_while(|&x| x <= horizon)).collect()
                }
            };
            times.sort_unstable();
            if !times.is_empty() {
                g.edges.insert((u, v), times);
            }
        }
        g
    }
}

/// A simple undirected graph with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StaticGraph {
    adj: Vec<Vec<usize>>,
}

impl StaticGraph {
    pub fn new(n: usize) -> Self {
        StaticGraph { adj: vec![Vec::new(); n] }
    }

    pub fn complete(n: usize) -> Self {
        StaticGraph { adj: (0..n).map(|u| (0..n).filter(|&v| v != u).collect()).collect() }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Returns false if the edge was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.n();
        if u == v || u >= n || v >= n {
            return Err(Error::InvalidGraph(format!("bad edge {{{},{}}} for n={n}", u + 1, v + 1)));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(true)
            }
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|a| a.binary_search(&v).is_ok())
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, a)| a.iter().copied().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }
}
